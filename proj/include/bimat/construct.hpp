#pragma once

#include <string>
#include <vector>

#include "bimat/bimatroid.hpp"
#include "bimat/matrix.hpp"
#include "bimat/matroid.hpp"

namespace bimat {

// Relation R between labeled row and column sets; adj[i] is the mask of
// columns related to row i.
struct Relation {
    std::vector<std::string> rows, cols;
    std::vector<Mask> adj;
};

// Does R contain a perfect matching of I onto J?  Augmenting-path matching,
// run per query; ground sets are tiny.
bool has_perfect_matching(const Relation& r, Mask I, Mask J);

// Bimatroid of nonvanishing square minors of a matrix.  Rows are labeled
// e0..e{m-1}, columns f0..f{n-1}.  (0,0) is regular by convention.
Bimatroid from_matrix(const QMatrix& a);
Bimatroid from_matrix(const FpMatrix& a);

// (I,J) regular iff R contains a matching of I onto J.
Bimatroid from_relation(const Relation& r);

// Bimatroid [phi] of a map phi: F -> E, via the relation {(phi(f), f)}.
// domain/codomain carry the labels; map[i] is the codomain index of domain
// element i.
Bimatroid from_map(const std::vector<std::string>& domain,
                   const std::vector<std::string>& codomain, const std::vector<int>& map);

// Bond bimatroid of M with respect to a basis B, on B x E(M):
// (I,J) regular iff (B - I) + J is a basis of M (union not necessarily
// disjoint, J ranges over the whole ground set).
Bimatroid bond(const Matroid& m, Mask B);

// Minors (I,I) for every I; rows and columns share E's labels.
Bimatroid identity_bimatroid(const std::vector<std::string>& labels);

}  // namespace bimat

#pragma once

#include <string>
#include <vector>

#include "bimat/matroid.hpp"

namespace bimat {

// phi maps ground position i of m to ground position phi[i] of mp.  The three
// predicates check the three equivalent conditions independently (rank
// differences, preimages of cocircuits, preimages of flats); they must agree
// on every input, which the tests exercise exhaustively on small grounds.
bool is_morphism_rank(const Matroid& m, const Matroid& mp, const std::vector<int>& phi);
bool is_morphism_cocircuits(const Matroid& m, const Matroid& mp, const std::vector<int>& phi);
bool is_morphism_flats(const Matroid& m, const Matroid& mp, const std::vector<int>& phi);

// Matroid on the domain with rank function T -> r_target(phi(T)).
Matroid pullback(const std::vector<std::string>& domain, const std::vector<int>& phi,
                 const Matroid& target);

// n is a quotient of m iff the identity is a morphism m -> n (same ground).
bool is_quotient(const Matroid& m, const Matroid& n);

// A validated morphism of matroids.
class MatroidMorphism {
  public:
    static MatroidMorphism make(Matroid source, Matroid target, std::vector<int> map);

    const Matroid& source() const { return source_; }
    const Matroid& target() const { return target_; }
    const std::vector<int>& map() const { return map_; }

    Mask image_of(Mask t) const;

  private:
    MatroidMorphism(Matroid s, Matroid t, std::vector<int> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}
    Matroid source_, target_;
    std::vector<int> map_;
};

Matroid pullback(const MatroidMorphism& phi);

// rk(source) - rk(pullback).
int nullity(const MatroidMorphism& phi);

// B(phi): subsets independent in the source whose image spans the target.
// Empty exactly when phi(F) does not span.
std::vector<Mask> bases_of_morphism(const MatroidMorphism& phi);

// B_k = |{T in B(phi) : |T| = k}| for k = 0..rk(source).
std::vector<long> basis_counts(const MatroidMorphism& phi);

// Matroid on Q + F (|Q| = rk(source), labels "q0"..) whose bases are the
// sets of size rk(source) meeting F in a basis of phi.  Requires phi(F) to
// span the target, otherwise the basis family would be empty.
Matroid tilde_matroid(const MatroidMorphism& phi);

}  // namespace bimat

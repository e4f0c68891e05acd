#pragma once

#include <string>
#include <vector>

#include "bimat/bimatroid.hpp"
#include "bimat/construct.hpp"
#include "bimat/matrix.hpp"
#include "bimat/morphism.hpp"
#include "bimat/prime_field.hpp"
#include "bimat/rational.hpp"
#include "bimat/rng.hpp"

namespace bimat {

std::vector<std::string> prefixed_labels(const std::string& prefix, int n);

// Dimensions drawn uniformly from [1, max]; entries uniform in GF(p).
FpMatrix random_fp_matrix(SplitMix64& g, int max_rows, int max_cols,
                          uint32_t p = kDefaultPrime);

// Entries are fractions with numerator in [-5, 5] and denominator in [1, 4].
QMatrix random_q_matrix(SplitMix64& g, int max_rows, int max_cols);

// Each (row, col) pair is present with probability 1/2; labels e0../f0..
Relation random_relation(SplitMix64& g, int max_rows, int max_cols);

// Composable bimatroid triples on label chains e -> f -> g -> h.
struct BimatroidTriple {
    Bimatroid a, b, c;
};
BimatroidTriple random_relation_bimatroid_triple(SplitMix64& g, int max_size);
BimatroidTriple random_matrix_bimatroid_triple(SplitMix64& g, int max_size,
                                               uint32_t p = kDefaultPrime);

// Realizable morphism over GF(p): a target realization and a surjective
// linear map are drawn first, then every source vector is a random preimage
// of its target column, so Phi(v_s) = v'_(phi(s)) holds by construction and
// phi covers the codomain (hence phi(F) spans the target).  Ground labels
// are f0.. (source) and g0.. (target); source rank <= 4.
MatroidMorphism random_realizable_morphism(SplitMix64& g, int max_f, int max_fp,
                                           uint32_t p = kDefaultPrime);

// Length in [1, max_len], entries uniform integers in [0, max_value]; zeros
// appear with their natural frequency to exercise internal-zero handling.
std::vector<Rational> random_nonneg_sequence(SplitMix64& g, int max_len, long max_value);

}  // namespace bimat

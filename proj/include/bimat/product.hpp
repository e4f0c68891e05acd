#pragma once

#include "bimat/bimatroid.hpp"
#include "bimat/matrix.hpp"
#include "bimat/matroid.hpp"

namespace bimat {

// (I,K) is regular iff some middle set J makes (I,J) regular in a and (J,K)
// regular in b.  Computed by joining the two minor families on J; the
// extended-matroid formula below is an independent oracle for the result.
Bimatroid product(const Bimatroid& a, const Bimatroid& b);

// (a.b)^ = (a^ + 0_G  v  0_E + b^) / F, evaluated literally with direct sum,
// matroid union and contraction.  Always equals extended_matroid(product).
Matroid frenk_extended(const Bimatroid& a, const Bimatroid& b);

// Associativity, left/right units, double transpose, identity transpose and
// the anti-homomorphism (a.b)^T = b^T.a^T on one composable triple.
Verdict check_category_laws(const Bimatroid& a, const Bimatroid& b, const Bimatroid& c);

struct CauchyBinetReport {
    bool inclusion = false;  // R(from_matrix(A.B)) inside R(product(...)); always true
    bool equality = false;   // the two families coincide; may fail by cancellation
};

// Compares the bimatroid of the matrix product with the product of the
// bimatroids.  Inclusion is a theorem; equality is only a statistic.
CauchyBinetReport cauchy_binet_check(const QMatrix& a, const QMatrix& b);
CauchyBinetReport cauchy_binet_check(const FpMatrix& a, const FpMatrix& b);

}  // namespace bimat

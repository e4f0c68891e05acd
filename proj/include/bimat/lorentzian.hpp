#pragma once

#include <string>
#include <vector>

#include "bimat/bimatroid.hpp"  // Verdict
#include "bimat/polynomial.hpp"
#include "bimat/rational.hpp"

namespace bimat {

// Sequence predicates over non-negative rationals (negative entries are a
// contract violation).  Log-concavity includes the no-internal-zeros
// requirement, matching the convention used throughout.
bool no_internal_zeros(const std::vector<Rational>& a);
bool is_unimodal(const std::vector<Rational>& a);
bool is_log_concave(const std::vector<Rational>& a);

// a is ultra log-concave at length s when (a_k / C(s,k)) is log-concave
// (with no internal zeros); requires s >= len(a)-1.
bool is_ultra_log_concave(const std::vector<Rational>& a, long s);

// Exhaustive exchange-property check on a set of equal-length exponent
// vectors; the witness names the failing (alpha, beta, i).
Verdict is_m_convex(const std::vector<Exponent>& support);

// All exponent vectors over n_vars of the given total degree, in
// lexicographic order (the discrete simplex Delta_n^d).
std::vector<Exponent> degree_simplex(int n_vars, int degree);

// Strict test: every monomial of the full degree-d simplex has a positive
// coefficient and every codegree-2 derivative has Hessian inertia exactly
// (1, n-1, 0).  Non-strict: coefficients >= 0, M-convex support, and every
// codegree-2 Hessian has at most one positive eigenvalue.  Exact inertia by
// symmetric congruence; variables capped at 12 and degree at 8.
bool is_strictly_lorentzian(const MultiPoly& p);
bool is_lorentzian(const MultiPoly& p);

// Builds sum a_k x^(d-k) y^k and checks Lorentzian-ness both via the Hessian
// pipeline and via ultra-log-concavity of the sequence; the two must agree
// (std::logic_error otherwise — a bug detector, not an input error) and the
// common verdict is returned.
bool bivariate_ulc_equivalence(const std::vector<Rational>& a, long d);

}  // namespace bimat

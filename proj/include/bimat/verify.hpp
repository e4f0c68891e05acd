#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bimat/bimatroid.hpp"
#include "bimat/morphism.hpp"
#include "bimat/rational.hpp"

namespace bimat {

// One exact check.  k >= 0 records the inequality at position k of the
// governing sequence; negative k marks auxiliary sub-checks:
//   -1  cross-path agreement (direct enumeration vs polynomial collapse)
//   -2  basis-exchange validation of an intermediate matroid
//   -3  the Q-collapse coefficient identity
//   -4  a Lorentzian sub-check
// For k >= 0 the record stores the two exact sides of the inequality
// lhs >= rhs; auxiliary records encode agreement as lhs = rhs = 1 versus
// lhs = 0 / rhs = 1.  part disambiguates multi-part reports ("vertical",
// "horizontal", "alpha=2", "skipped: ...").
struct CheckRecord {
    int k = 0;
    std::string part;
    Rational lhs, rhs;
    bool holds = false;
};

// Structured outcome of one theorem verification.  verdict is the
// conjunction of all check records; a false verdict on a valid instance
// means a disproved theorem, which the CLI escalates to an alarm exit.
struct TheoremReport {
    std::string theorem;   // A | B | C | mason | C-pipeline | E-lorentzian
    std::string instance;  // canonical JSON text of the verified input
    uint64_t seed = 0;     // trial seed when generated, 0 for file inputs
    std::vector<std::pair<std::string, std::vector<Rational>>> sequences;
    std::vector<CheckRecord> checks;
    bool verdict = true;
};

// R_k ultra log-concavity: R_k^2 / C(mn,k)^2 >= R_{k+1}/C(mn,k+1) *
// R_{k-1}/C(mn,k-1) with mn = min(m,n), plus the polynomial cross-path.
TheoremReport check_theorem_A(const Bimatroid& b);

// Vertical (by column count) and horizontal (by row count) regular-rectangle
// sequences, each ultra log-concave with normalization N = |E|+|F|, plus the
// homogenized independent-set polynomial cross-path for each orientation.
TheoremReport check_theorem_B(const Bimatroid& b);

// Log-concavity of the morphism basis-count sequence B_k.
TheoremReport check_theorem_C(const MatroidMorphism& phi);

// Theorem C against the constant morphism to U_{0,1}; B_k then counts
// independent sets, cross-checked against direct independent-set counts.
TheoremReport check_mason(const Matroid& m);

// The classifying-matroid pipeline: exchange validity of M~, the Q-collapse
// identity against the weak basis polynomial at alpha = r, ultra
// log-concavity of C(r,k) B_k at s = r (cross-checked against the bivariate
// collapse), and Lorentzian-ness of the basis polynomial when within caps.
TheoremReport check_thmC_pipeline(const MatroidMorphism& phi);

// Lorentzian-ness of the alpha-weak basis polynomial (alpha >= nullity).
TheoremReport check_weak_basis_poly_lorentzian(const MatroidMorphism& phi, int alpha);

}  // namespace bimat

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bimat/bimatroid.hpp"
#include "bimat/matrix.hpp"
#include "bimat/matroid.hpp"
#include "bimat/morphism.hpp"
#include "bimat/rational.hpp"

namespace bimat {

using Exponent = std::vector<uint8_t>;

// Sparse multivariate polynomial over the rationals with a fixed ordered
// variable list (at most 24 variables).  Terms are kept in a map ordered
// lexicographically by exponent vector, which doubles as the canonical
// serialization order; zero coefficients are never stored.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);

    int n_vars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int var_index(const std::string& name) const;  // -1 if absent

    void add_term(const Exponent& exp, const Rational& c);
    Rational coeff(const Exponent& exp) const;

    int total_degree() const;     // max over terms; -1 for the zero polynomial
    bool is_homogeneous() const;  // vacuously true for the zero polynomial

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, MultiPoly p);

    Rational evaluate(const std::vector<Rational>& point) const;
    std::vector<Exponent> support() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

  private:
    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_;
};

// Iterated formal partial derivative by the exponent vector alpha.
MultiPoly partial_derivative(const MultiPoly& p, const Exponent& alpha);

// A linear form sum_i c_i * t_i given as (target variable, coefficient).
using LinearForm = std::vector<std::pair<std::string, Rational>>;

// Substitute each assigned variable by its linear form; unassigned variables
// pass through unchanged.  All coefficients must be >= 0 (the class of
// coordinate changes that preserves the Lorentzian property).
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, LinearForm>& assignment);

// kappa-truncations: keep the terms with exponent <= kappa (resp. >= kappa)
// componentwise.
MultiPoly truncate_le(const MultiPoly& p, const Exponent& kappa);
MultiPoly truncate_ge(const MultiPoly& p, const Exponent& kappa);

// Indicator polynomial of a set of exponent vectors: sum of w^alpha / alpha!.
MultiPoly indicator_poly(std::vector<std::string> vars, const std::vector<Exponent>& support);

// p_R(w) = sum over regular (I,J) of prod_{e not in I} w_e * prod_{f in J} w_f.
// Variables are row labels followed by column labels, the latter primed on
// collision exactly as in extended_matroid, so this polynomial literally
// equals basis_generating_poly(extended_matroid(b)).
MultiPoly regular_minor_poly(const Bimatroid& b);

// Sum over bases of the squarefree basis monomials; variables = ground labels.
MultiPoly basis_generating_poly(const Matroid& m);

// sum_{S independent} z^{N-|S|} prod_{s in S} w_s with N = |ground|; the
// homogenizing variable is appended after the ground variables.
MultiPoly independent_set_poly_homogenized(const Matroid& m, const std::string& z);

// p^alpha(w) = sum_k sum_{T in B_k(phi)} C(alpha, r-k) w0^{r-k} prod_{f in T} w_f,
// homogeneous of degree r = rk(source).  Requires alpha >= nullity(phi).
MultiPoly weak_basis_poly(const MatroidMorphism& phi, int alpha);

// Group every variable to 'x' or 'y' and return the dense coefficient list
// a_k of x^(d-k) y^k, k = 0..d; requires p homogeneous.
std::vector<Rational> bivariate_collapse(const MultiPoly& p, const std::map<std::string, char>& grouping);

// Symmetric Hessian of a homogeneous quadratic: H_ii = 2 c(2e_i), H_ij = c(e_i+e_j).
QMatrix hessian_of_quadratic(const MultiPoly& p);

}  // namespace bimat

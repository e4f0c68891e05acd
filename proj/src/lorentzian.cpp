#include "bimat/lorentzian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bimat/errors.hpp"

namespace bimat {

namespace {

constexpr int kMaxLorentzianVars = 12;
constexpr int kMaxLorentzianDegree = 8;

void check_nonnegative(const std::vector<Rational>& a, const char* who) {
    for (const auto& x : a)
        if (x.sign() < 0) throw precondition_error(std::string(who) + ": negative entry");
}

std::string exp_str(const Exponent& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(int(e[i]));
    }
    return s + ")";
}

// All exponent vectors of total degree d over n variables, in lexicographic
// order.
void enumerate_simplex(int n, int d, Exponent& cur, int i, std::vector<Exponent>& out) {
    if (i == n - 1) {
        cur[i] = static_cast<uint8_t>(d);
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= d; ++v) {
        cur[i] = static_cast<uint8_t>(v);
        enumerate_simplex(n, d - v, cur, i + 1, out);
    }
}

// Shared degree >= 2 sweep: true when every codegree-2 derivative's Hessian
// satisfies pred(inertia).
template <typename Pred>
bool hessian_sweep(const MultiPoly& p, int d, Pred pred) {
    for (const Exponent& alpha : degree_simplex(p.n_vars(), d - 2)) {
        MultiPoly q = partial_derivative(p, alpha);
        if (!pred(inertia(hessian_of_quadratic(q)))) return false;
    }
    return true;
}

void check_lorentzian_input(const MultiPoly& p) {
    if (!p.is_homogeneous())
        throw precondition_error("lorentzian: polynomial not homogeneous");
    if (p.n_vars() > kMaxLorentzianVars)
        throw precondition_error("lorentzian: more than 12 variables");
    if (p.total_degree() > kMaxLorentzianDegree)
        throw precondition_error("lorentzian: degree above 8");
}

}  // namespace

bool no_internal_zeros(const std::vector<Rational>& a) {
    check_nonnegative(a, "no_internal_zeros");
    size_t first = a.size(), last = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) {
            first = std::min(first, i);
            last = i;
        }
    if (first >= a.size()) return true;  // all zero
    for (size_t i = first + 1; i < last; ++i)
        if (a[i].is_zero()) return false;
    return true;
}

bool is_unimodal(const std::vector<Rational>& a) {
    check_nonnegative(a, "is_unimodal");
    size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
    while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
    return i + 1 >= a.size();
}

bool is_log_concave(const std::vector<Rational>& a) {
    check_nonnegative(a, "is_log_concave");
    if (!no_internal_zeros(a)) return false;
    for (size_t k = 1; k + 1 < a.size(); ++k)
        if (a[k] * a[k] < a[k - 1] * a[k + 1]) return false;
    return true;
}

bool is_ultra_log_concave(const std::vector<Rational>& a, long s) {
    check_nonnegative(a, "is_ultra_log_concave");
    if (s + 1 < static_cast<long>(a.size()))
        throw precondition_error("is_ultra_log_concave: normalization length too small");
    std::vector<Rational> b(a.size());
    for (size_t k = 0; k < a.size(); ++k) b[k] = a[k] / binomial(s, static_cast<long>(k));
    return is_log_concave(b);
}

std::vector<Exponent> degree_simplex(int n_vars, int degree) {
    std::vector<Exponent> out;
    if (n_vars == 0) return out;
    Exponent cur(n_vars, 0);
    enumerate_simplex(n_vars, degree, cur, 0, out);
    return out;
}

Verdict is_m_convex(const std::vector<Exponent>& support) {
    if (support.empty()) return {};
    for (const auto& e : support)
        if (e.size() != support.front().size())
            throw precondition_error("is_m_convex: exponent vectors differ in length");
    std::set<Exponent> s(support.begin(), support.end());
    for (const auto& alpha : s)
        for (const auto& beta : s)
            for (size_t i = 0; i < alpha.size(); ++i) {
                if (alpha[i] <= beta[i]) continue;
                bool ok = false;
                for (size_t j = 0; j < alpha.size() && !ok; ++j) {
                    if (alpha[j] >= beta[j]) continue;
                    Exponent moved = alpha;
                    --moved[i];
                    ++moved[j];
                    if (s.count(moved)) ok = true;
                }
                if (!ok)
                    return {false, "exchange fails at alpha=" + exp_str(alpha) +
                                       " beta=" + exp_str(beta) + " i=" + std::to_string(i)};
            }
    return {};
}

bool is_strictly_lorentzian(const MultiPoly& p) {
    check_lorentzian_input(p);
    int d = p.total_degree();
    if (d < 0) return false;  // the zero polynomial misses every monomial
    for (const Exponent& e : degree_simplex(p.n_vars(), d))
        if (p.coeff(e).sign() <= 0) return false;
    if (d < 2) return true;
    int n = p.n_vars();
    return hessian_sweep(p, d, [n](const Inertia& in) {
        return in.n_plus == 1 && in.n_minus == n - 1 && in.n_zero == 0;
    });
}

bool is_lorentzian(const MultiPoly& p) {
    check_lorentzian_input(p);
    for (const auto& [e, c] : p.terms())
        if (c.sign() < 0) return false;
    if (p.is_zero()) return true;
    if (!is_m_convex(p.support()).valid) return false;
    int d = p.total_degree();
    if (d < 2) return true;
    return hessian_sweep(p, d, [](const Inertia& in) { return in.n_plus <= 1; });
}

bool bivariate_ulc_equivalence(const std::vector<Rational>& a, long d) {
    check_nonnegative(a, "bivariate_ulc_equivalence");
    if (static_cast<long>(a.size()) != d + 1)
        throw precondition_error("bivariate_ulc_equivalence: need exactly d+1 coefficients");
    MultiPoly p(std::vector<std::string>{"x", "y"});
    for (long k = 0; k <= d; ++k)
        p.add_term(Exponent{static_cast<uint8_t>(d - k), static_cast<uint8_t>(k)}, a[k]);
    bool via_hessian = is_lorentzian(p);
    bool via_sequence = no_internal_zeros(a) && is_ultra_log_concave(a, d);
    if (via_hessian != via_sequence)
        throw std::logic_error(
            "bivariate_ulc_equivalence: Hessian and sequence verdicts disagree");
    return via_hessian;
}

}  // namespace bimat

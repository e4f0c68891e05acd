#include "bimat/verify.hpp"

#include <algorithm>

#include "bimat/json_io.hpp"
#include "bimat/lorentzian.hpp"
#include "bimat/polynomial.hpp"
#include "bimat/product.hpp"

namespace bimat {

namespace {

const Rational kTrue(1), kFalse(0);

void push_bool(TheoremReport& rep, int k, std::string part, bool ok) {
    rep.checks.push_back({k, std::move(part), ok ? kTrue : kFalse, kTrue, ok});
    rep.verdict = rep.verdict && ok;
}

// a_k^2 / C(s,k)^2 >= a_{k+1}/C(s,k+1) * a_{k-1}/C(s,k-1) for k = 1..len-2.
void push_ulc_records(TheoremReport& rep, const std::vector<Rational>& a, long s,
                      const std::string& part) {
    for (size_t k = 1; k + 1 < a.size(); ++k) {
        Rational bk = a[k] / binomial(s, static_cast<long>(k));
        Rational lhs = bk * bk;
        Rational rhs = (a[k + 1] / binomial(s, static_cast<long>(k + 1))) *
                       (a[k - 1] / binomial(s, static_cast<long>(k - 1)));
        bool ok = lhs >= rhs;
        rep.checks.push_back({static_cast<int>(k), part, lhs, rhs, ok});
        rep.verdict = rep.verdict && ok;
    }
}

// a_k^2 >= a_{k+1} * a_{k-1} for k = 1..len-2.
void push_lc_records(TheoremReport& rep, const std::vector<Rational>& a,
                     const std::string& part) {
    for (size_t k = 1; k + 1 < a.size(); ++k) {
        Rational lhs = a[k] * a[k], rhs = a[k + 1] * a[k - 1];
        bool ok = lhs >= rhs;
        rep.checks.push_back({static_cast<int>(k), part, lhs, rhs, ok});
        rep.verdict = rep.verdict && ok;
    }
}

std::vector<Rational> to_rationals(const std::vector<long>& v) {
    std::vector<Rational> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

// Counts of rectangles bucketed by |T| (vertical) or |S| (horizontal),
// zero-padded to length n+1.
std::vector<Rational> rectangle_counts(const std::vector<MinorPair>& fam, Orientation o,
                                       size_t len) {
    std::vector<Rational> counts(len, Rational(0));
    for (const auto& st : fam)
        counts[o == Orientation::vertical ? popcount(st.J) : popcount(st.I)] += Rational(1);
    return counts;
}

// Vertical-orientation polynomial path: collapse the homogenized
// independent-set polynomial of the extended matroid with row variables and
// the homogenizer grouped to x, column variables to y.  The y-degree-k
// coefficient counts independent sets meeting the column side in k elements,
// which match the vertical rectangles by (S,T) <-> (E-S)+T.
std::vector<Rational> vertical_counts_via_poly(const Bimatroid& b) {
    Matroid ext = extended_matroid(b);
    MultiPoly p = independent_set_poly_homogenized(ext, "z");
    std::map<std::string, char> grouping;
    for (int i = 0; i < p.n_vars(); ++i)
        grouping[p.vars()[i]] = (i >= b.m() && i < b.m() + b.n()) ? 'y' : 'x';
    return bivariate_collapse(p, grouping);
}

}  // namespace

TheoremReport check_theorem_A(const Bimatroid& b) {
    TheoremReport rep;
    rep.theorem = "A";
    rep.instance = bimatroid_to_json(b).dump();
    long mn = std::min(b.m(), b.n());
    std::vector<Rational> R = to_rationals(b.minor_counts());

    // Polynomial path: R_k is the y-degree-k coefficient of the regular
    // minor polynomial collapsed rows -> x, columns -> y.
    MultiPoly p = regular_minor_poly(b);
    std::map<std::string, char> grouping;
    for (int i = 0; i < p.n_vars(); ++i) grouping[p.vars()[i]] = i < b.m() ? 'x' : 'y';
    std::vector<Rational> collapsed = bivariate_collapse(p, grouping);
    std::vector<Rational> padded = R;
    padded.resize(collapsed.size(), Rational(0));
    push_bool(rep, -1, "", padded == collapsed);

    rep.sequences.emplace_back("R", R);
    push_ulc_records(rep, R, mn, "");
    return rep;
}

TheoremReport check_theorem_B(const Bimatroid& b) {
    TheoremReport rep;
    rep.theorem = "B";
    rep.instance = bimatroid_to_json(b).dump();
    size_t N = static_cast<size_t>(b.m()) + static_cast<size_t>(b.n());

    std::vector<Rational> vert =
        rectangle_counts(regular_rectangles(b, Orientation::vertical), Orientation::vertical,
                         N + 1);
    std::vector<Rational> horiz =
        rectangle_counts(regular_rectangles(b, Orientation::horizontal),
                         Orientation::horizontal, N + 1);

    push_bool(rep, -1, "vertical", vert == vertical_counts_via_poly(b));
    push_bool(rep, -1, "horizontal", horiz == vertical_counts_via_poly(b.transpose()));

    rep.sequences.emplace_back("RR_vertical", vert);
    rep.sequences.emplace_back("RR_horizontal", horiz);
    push_ulc_records(rep, vert, static_cast<long>(N), "vertical");
    push_ulc_records(rep, horiz, static_cast<long>(N), "horizontal");
    return rep;
}

TheoremReport check_theorem_C(const MatroidMorphism& phi) {
    TheoremReport rep;
    rep.theorem = "C";
    rep.instance = morphism_to_json(phi).dump();
    std::vector<Rational> B = to_rationals(basis_counts(phi));
    rep.sequences.emplace_back("B", B);
    push_lc_records(rep, B, "");
    return rep;
}

TheoremReport check_mason(const Matroid& m) {
    MatroidMorphism phi =
        MatroidMorphism::make(m, uniform_matroid(0, 1), std::vector<int>(m.n(), 0));
    TheoremReport rep = check_theorem_C(phi);
    rep.theorem = "mason";
    rep.instance = matroid_to_json(m).dump();

    // B_k must equal the independent-set counts I_k.
    std::vector<Rational> I(m.rank() + 1, Rational(0));
    for (Mask s : m.independent_sets()) I[popcount(s)] += Rational(1);
    bool agree = rep.sequences.front().second == I;
    push_bool(rep, -1, "", agree);
    return rep;
}

TheoremReport check_thmC_pipeline(const MatroidMorphism& phi) {
    TheoremReport rep;
    rep.theorem = "C-pipeline";
    rep.instance = morphism_to_json(phi).dump();
    int r = phi.source().rank();

    Matroid tilde = tilde_matroid(phi);
    BasisCheck exchange = validate_bases(tilde.bases(), tilde.n());
    push_bool(rep, -2, "", exchange.valid);

    // Q-collapse of the basis polynomial must reproduce the weak basis
    // polynomial at alpha = r (coefficients C(r, r-k) = C(r, |T|)).
    MultiPoly ptilde = basis_generating_poly(tilde);
    MultiPoly target = weak_basis_poly(phi, r);
    std::map<std::string, LinearForm> to_w0;
    for (int q = 0; q < r; ++q)
        to_w0[tilde.ground()[q]] = {{target.vars()[0], Rational(1)}};
    MultiPoly collapsed_poly = substitute(ptilde, to_w0);
    if (r == 0) {
        // No q-variable introduced w0; embed into the target's variable list.
        MultiPoly embedded(target.vars());
        for (const auto& [e, c] : collapsed_poly.terms()) {
            Exponent ee(e.size() + 1, 0);
            std::copy(e.begin(), e.end(), ee.begin() + 1);
            embedded.add_term(ee, c);
        }
        collapsed_poly = embedded;
    }
    push_bool(rep, -3, "", collapsed_poly == target);

    // Weighted sequence C(r,k) B_k, ultra log-concave at s = r; the
    // bivariate collapse (Q -> x, F -> y) must produce the same numbers.
    std::vector<long> B = basis_counts(phi);
    std::vector<Rational> weighted(B.size());
    for (size_t k = 0; k < B.size(); ++k)
        weighted[k] = binomial(r, static_cast<long>(k)) * Rational(B[k]);
    std::map<std::string, char> grouping;
    for (int i = 0; i < tilde.n(); ++i) grouping[tilde.ground()[i]] = i < r ? 'x' : 'y';
    std::vector<Rational> collapsed = bivariate_collapse(ptilde, grouping);
    collapsed.resize(std::max(collapsed.size(), weighted.size()), Rational(0));
    std::vector<Rational> padded = weighted;
    padded.resize(collapsed.size(), Rational(0));
    push_bool(rep, -1, "", padded == collapsed);

    rep.sequences.emplace_back("B", to_rationals(B));
    rep.sequences.emplace_back("weighted", weighted);
    push_ulc_records(rep, weighted, r, "weighted");

    if (tilde.n() <= 12 && r <= 8)
        push_bool(rep, -4, "", is_lorentzian(ptilde));
    else
        push_bool(rep, -4, "skipped: caps exceeded", true);
    return rep;
}

TheoremReport check_weak_basis_poly_lorentzian(const MatroidMorphism& phi, int alpha) {
    TheoremReport rep;
    rep.theorem = "E-lorentzian";
    rep.instance = morphism_to_json(phi).dump();
    MultiPoly p = weak_basis_poly(phi, alpha);
    rep.sequences.emplace_back("B", to_rationals(basis_counts(phi)));
    std::string part = "alpha=" + std::to_string(alpha);
    if (p.n_vars() <= 12 && phi.source().rank() <= 8)
        push_bool(rep, -4, part, is_lorentzian(p));
    else
        push_bool(rep, -4, part + " skipped: caps exceeded", true);
    return rep;
}

}  // namespace bimat

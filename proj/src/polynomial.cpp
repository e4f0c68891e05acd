#include "bimat/polynomial.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bimat/errors.hpp"

namespace bimat {

namespace {

constexpr int kMaxPolyVars = 24;

std::string fresh_label(std::unordered_set<std::string>& used, std::string l) {
    while (used.count(l)) l += "'";
    used.insert(l);
    return l;
}

Exponent squarefree_exponent(int n_vars, Mask bits, int shift = 0) {
    Exponent e(n_vars, 0);
    for (int i : mask_to_indices(bits)) e[i + shift] = 1;
    return e;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (static_cast<int>(vars_.size()) > kMaxPolyVars)
        throw precondition_error("MultiPoly: more than 24 variables");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_)
        if (!seen.insert(v).second) throw precondition_error("MultiPoly: duplicate variable name");
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponent& exp, const Rational& c) {
    if (exp.size() != vars_.size())
        throw precondition_error("MultiPoly: exponent length does not match variable count");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

static int exp_total(const Exponent& e) {
    int t = 0;
    for (uint8_t x : e) t += x;
    return t;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = exp_total(e);
        if (d == -1) d = t;
        else if (t != d) return false;
    }
    return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) throw precondition_error("MultiPoly: variable lists differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ != o.vars_) throw precondition_error("MultiPoly: variable lists differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) throw precondition_error("MultiPoly: variable lists differ");
    MultiPoly r(a.vars_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) {
                int s = ea[i] + eb[i];
                if (s > 255) throw precondition_error("MultiPoly: exponent overflow");
                e[i] = static_cast<uint8_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly operator*(const Rational& c, MultiPoly p) {
    if (c.is_zero()) return MultiPoly(p.vars_);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw precondition_error("MultiPoly: evaluation point has wrong arity");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

std::vector<Exponent> MultiPoly::support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

MultiPoly partial_derivative(const MultiPoly& p, const Exponent& alpha) {
    if (alpha.size() != p.vars().size())
        throw precondition_error("partial_derivative: order vector has wrong arity");
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Rational f = c;
        Exponent ne(e.size());
        bool dies = false;
        for (size_t i = 0; i < e.size() && !dies; ++i) {
            if (e[i] < alpha[i]) {
                dies = true;
                break;
            }
            for (int k = 0; k < alpha[i]; ++k) f *= Rational(e[i] - k);
            ne[i] = static_cast<uint8_t>(e[i] - alpha[i]);
        }
        if (!dies) r.add_term(ne, f);
    }
    return r;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, LinearForm>& assignment) {
    // Result variables: targets of assigned variables (in the order they
    // appear), unassigned variables unchanged, first occurrence wins.
    std::vector<std::string> rvars;
    std::unordered_map<std::string, int> pos;
    auto add_var = [&](const std::string& v) {
        if (pos.emplace(v, static_cast<int>(rvars.size())).second) rvars.push_back(v);
    };
    for (const auto& v : p.vars()) {
        auto it = assignment.find(v);
        if (it == assignment.end()) {
            add_var(v);
            continue;
        }
        for (const auto& [target, c] : it->second) {
            if (c.sign() < 0)
                throw precondition_error("substitute: negative coefficient in linear form");
            add_var(target);
        }
    }
    // Linear form of every source variable over the result variables.
    std::vector<std::vector<std::pair<int, Rational>>> forms(p.vars().size());
    for (size_t i = 0; i < p.vars().size(); ++i) {
        auto it = assignment.find(p.vars()[i]);
        if (it == assignment.end()) {
            forms[i].emplace_back(pos.at(p.vars()[i]), Rational(1));
            continue;
        }
        for (const auto& [target, c] : it->second)
            if (!c.is_zero()) forms[i].emplace_back(pos.at(target), c);
    }
    MultiPoly out(rvars);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly acc = MultiPoly::constant(rvars, c);
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) {
                MultiPoly lf(rvars);
                for (const auto& [j, cc] : forms[i]) {
                    Exponent ee(rvars.size(), 0);
                    ee[j] = 1;
                    lf.add_term(ee, cc);
                }
                acc = acc * lf;
            }
        out += acc;
    }
    return out;
}

MultiPoly truncate_le(const MultiPoly& p, const Exponent& kappa) {
    if (kappa.size() != p.vars().size())
        throw precondition_error("truncate_le: kappa has wrong arity");
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > kappa[i]) keep = false;
        if (keep) r.add_term(e, c);
    }
    return r;
}

MultiPoly truncate_ge(const MultiPoly& p, const Exponent& kappa) {
    if (kappa.size() != p.vars().size())
        throw precondition_error("truncate_ge: kappa has wrong arity");
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < kappa[i]) keep = false;
        if (keep) r.add_term(e, c);
    }
    return r;
}

MultiPoly indicator_poly(std::vector<std::string> vars, const std::vector<Exponent>& support) {
    MultiPoly p(std::move(vars));
    for (const auto& e : support) {
        Rational fact(1);
        for (uint8_t x : e) fact *= factorial(x);
        p.add_term(e, Rational(1) / fact);
    }
    return p;
}

MultiPoly regular_minor_poly(const Bimatroid& b) {
    std::unordered_set<std::string> used(b.rows().begin(), b.rows().end());
    std::vector<std::string> vars = b.rows();
    for (const auto& c : b.cols()) vars.push_back(fresh_label(used, c));
    MultiPoly p(std::move(vars));
    Mask fullE = full_mask(b.m());
    for (const auto& mp : b.minors())
        p.add_term(squarefree_exponent(p.n_vars(), (fullE & ~mp.I) | (mp.J << b.m())), Rational(1));
    return p;
}

MultiPoly basis_generating_poly(const Matroid& m) {
    MultiPoly p(m.ground());
    for (Mask b : m.bases()) p.add_term(squarefree_exponent(m.n(), b), Rational(1));
    return p;
}

MultiPoly independent_set_poly_homogenized(const Matroid& m, const std::string& z) {
    std::unordered_set<std::string> used(m.ground().begin(), m.ground().end());
    std::vector<std::string> vars = m.ground();
    vars.push_back(fresh_label(used, z));
    int n = m.n();
    MultiPoly p(std::move(vars));
    for (Mask s : m.independent_sets()) {
        Exponent e = squarefree_exponent(n + 1, s);
        e[n] = static_cast<uint8_t>(n - popcount(s));
        p.add_term(e, Rational(1));
    }
    return p;
}

MultiPoly weak_basis_poly(const MatroidMorphism& phi, int alpha) {
    if (alpha < nullity(phi))
        throw precondition_error("weak_basis_poly: alpha is smaller than the nullity");
    const Matroid& m = phi.source();
    int r = m.rank(), n = m.n();
    std::unordered_set<std::string> used(m.ground().begin(), m.ground().end());
    std::vector<std::string> vars{fresh_label(used, "w0")};
    vars.insert(vars.end(), m.ground().begin(), m.ground().end());
    MultiPoly p(std::move(vars));
    for (Mask t : bases_of_morphism(phi)) {
        int k = popcount(t);
        Exponent e = squarefree_exponent(n + 1, t, 1);
        e[0] = static_cast<uint8_t>(r - k);
        p.add_term(e, binomial(alpha, r - k));
    }
    return p;
}

std::vector<Rational> bivariate_collapse(const MultiPoly& p,
                                         const std::map<std::string, char>& grouping) {
    if (!p.is_homogeneous()) throw precondition_error("bivariate_collapse: polynomial not homogeneous");
    std::vector<bool> to_y(p.vars().size());
    for (size_t i = 0; i < p.vars().size(); ++i) {
        auto it = grouping.find(p.vars()[i]);
        if (it == grouping.end())
            throw precondition_error("bivariate_collapse: variable missing from grouping");
        if (it->second != 'x' && it->second != 'y')
            throw precondition_error("bivariate_collapse: grouping values must be 'x' or 'y'");
        to_y[i] = (it->second == 'y');
    }
    int d = p.total_degree();
    if (d < 0) return {};
    std::vector<Rational> a(d + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        int ydeg = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (to_y[i]) ydeg += e[i];
        a[ydeg] += c;
    }
    return a;
}

QMatrix hessian_of_quadratic(const MultiPoly& p) {
    int n = p.n_vars();
    QMatrix h(n, n, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        if (exp_total(e) != 2)
            throw precondition_error("hessian_of_quadratic: polynomial not homogeneous quadratic");
        int i = -1, j = -1;
        for (int k = 0; k < n; ++k) {
            if (e[k] == 2) i = j = k;
            else if (e[k] == 1) (i < 0 ? i : j) = k;
        }
        if (i == j) h.at(i, i) = Rational(2) * c;
        else h.at(i, j) = h.at(j, i) = c;
    }
    return h;
}

}  // namespace bimat

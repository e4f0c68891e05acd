#include "bimat/product.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bimat/construct.hpp"
#include "bimat/errors.hpp"

namespace bimat {

namespace {

// Map positions of b's rows onto positions of a's cols (same labeled set,
// possibly in a different order).
std::vector<int> middle_permutation(const Bimatroid& a, const Bimatroid& b) {
    if (a.n() != b.m()) throw precondition_error("product: middle grounds differ in size");
    std::unordered_map<std::string, int> pos;
    for (int j = 0; j < a.n(); ++j) pos[a.cols()[j]] = j;
    std::vector<int> perm(b.m());
    for (int i = 0; i < b.m(); ++i) {
        auto it = pos.find(b.rows()[i]);
        if (it == pos.end()) throw precondition_error("product: middle grounds differ");
        perm[i] = it->second;
    }
    return perm;
}

Mask apply_perm(const std::vector<int>& perm, Mask s) {
    Mask out = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        if (s & (1u << i)) out |= (1u << perm[i]);
    return out;
}

std::string fresh_label(std::unordered_set<std::string>& used, std::string l) {
    while (used.count(l)) l += "'";
    used.insert(l);
    return l;
}

template <typename K>
CauchyBinetReport cauchy_binet_impl(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.rows()) throw precondition_error("cauchy_binet_check: dimension mismatch");
    Bimatroid lhs = from_matrix(a.multiply(b));
    Bimatroid fa = from_matrix(a), fb = from_matrix(b);
    // The middle ground is literally the same index set; align the labels.
    Bimatroid rhs = product(fa, relabeled(fb, fa.cols(), fb.cols()));
    CauchyBinetReport rep;
    rep.inclusion = std::includes(rhs.minors().begin(), rhs.minors().end(),
                                  lhs.minors().begin(), lhs.minors().end(), minor_less);
    rep.equality = lhs.minors() == rhs.minors();
    return rep;
}

}  // namespace

Bimatroid product(const Bimatroid& a, const Bimatroid& b) {
    std::vector<int> perm = middle_permutation(a, b);
    std::unordered_map<Mask, std::vector<Mask>> left;  // J -> all I with (I,J) in R(a)
    for (const auto& p : a.minors()) left[p.J].push_back(p.I);
    std::vector<MinorPair> out;
    for (const auto& p : b.minors()) {
        auto it = left.find(apply_perm(perm, p.I));
        if (it == left.end()) continue;
        for (Mask i : it->second) out.push_back({i, p.J});
    }
    return Bimatroid::from_minors(a.rows(), b.cols(), std::move(out));
}

Matroid frenk_extended(const Bimatroid& a, const Bimatroid& b) {
    std::vector<int> perm = middle_permutation(a, b);
    int me = a.m(), nf = a.n();
    // Ground E + F + G.  G gets the labels extended_matroid(product(a,b))
    // would assign (primed against E only), so the routes stay comparable;
    // F is contracted away, its labels just need to be distinct.
    std::unordered_set<std::string> used(a.rows().begin(), a.rows().end());
    std::vector<std::string> glabels;
    for (const auto& l : b.cols()) glabels.push_back(fresh_label(used, l));
    std::vector<std::string> ground = a.rows();
    for (const auto& l : a.cols()) ground.push_back(fresh_label(used, l));
    ground.insert(ground.end(), glabels.begin(), glabels.end());

    Mask fullE = full_mask(me), fullF = full_mask(nf);
    std::vector<Mask> left, right;  // bases of a^ + 0_G and 0_E + b^
    for (const auto& p : a.minors()) left.push_back((fullE & ~p.I) | (p.J << me));
    for (const auto& p : b.minors())
        right.push_back(((fullF & ~apply_perm(perm, p.I)) << me) |
                        (p.J << (me + nf)));
    Matroid uni = matroid_union(Matroid::from_bases(ground, std::move(left)),
                                Matroid::from_bases(ground, std::move(right)));
    return uni.contracted(fullF << me);
}

Verdict check_category_laws(const Bimatroid& a, const Bimatroid& b, const Bimatroid& c) {
    auto fail = [](std::string w) { return Verdict{false, std::move(w)}; };
    Bimatroid ab = product(a, b), bc = product(b, c);
    if (product(ab, c) != product(a, bc)) return fail("associativity: (a.b).c != a.(b.c)");
    for (const Bimatroid* x : {&a, &b, &c}) {
        if (product(identity_bimatroid(x->rows()), *x) != *x) return fail("left unit law");
        if (product(*x, identity_bimatroid(x->cols())) != *x) return fail("right unit law");
        if (x->transpose().transpose() != *x) return fail("double transpose");
    }
    Bimatroid ie = identity_bimatroid(a.rows());
    if (ie.transpose() != ie) return fail("identity transpose");
    if (ab.transpose() != product(b.transpose(), a.transpose()))
        return fail("anti-homomorphism: (a.b)^T != b^T.a^T");
    if (bc.transpose() != product(c.transpose(), b.transpose()))
        return fail("anti-homomorphism: (b.c)^T != c^T.b^T");
    return {};
}

CauchyBinetReport cauchy_binet_check(const QMatrix& a, const QMatrix& b) {
    return cauchy_binet_impl(a, b);
}
CauchyBinetReport cauchy_binet_check(const FpMatrix& a, const FpMatrix& b) {
    return cauchy_binet_impl(a, b);
}

}  // namespace bimat

#include "bimat/morphism.hpp"

#include <algorithm>
#include <unordered_set>

#include "bimat/errors.hpp"

namespace bimat {

namespace {

void check_map(const Matroid& m, const Matroid& mp, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != m.n())
        throw precondition_error("morphism: map is not total on the domain");
    for (int v : phi)
        if (v < 0 || v >= mp.n()) throw precondition_error("morphism: image out of range");
}

Mask image_mask(const std::vector<int>& phi, Mask t) {
    Mask out = 0;
    for (size_t i = 0; i < phi.size(); ++i)
        if (t & (1u << i)) out |= (1u << phi[i]);
    return out;
}

Mask preimage_mask(const std::vector<int>& phi, Mask tp) {
    Mask out = 0;
    for (size_t i = 0; i < phi.size(); ++i)
        if (tp & (1u << phi[i])) out |= (1u << i);
    return out;
}

}  // namespace

bool is_morphism_rank(const Matroid& m, const Matroid& mp, const std::vector<int>& phi) {
    check_map(m, mp, phi);
    size_t sz = size_t{1} << m.n();
    // r'(phi(T2)) - r'(phi(T1)) <= r(T2) - r(T1), all T1 <= T2.  Ranks are
    // tabulated once so the 3^n pair sweep is pure array lookups.
    std::vector<int> diff(sz);
    for (size_t t = 0; t < sz; ++t)
        diff[t] = m.rank_of(static_cast<Mask>(t)) -
                  mp.rank_of(image_mask(phi, static_cast<Mask>(t)));
    for (size_t t2 = 0; t2 < sz; ++t2) {
        bool ok = true;
        for_each_submask(static_cast<Mask>(t2), [&](Mask t1) {
            if (diff[t1] > diff[t2]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_morphism_cocircuits(const Matroid& m, const Matroid& mp, const std::vector<int>& phi) {
    check_map(m, mp, phi);
    std::vector<Mask> cocircs = m.cocircuits();
    for (Mask cp : mp.cocircuits()) {
        Mask pre = preimage_mask(phi, cp);
        // pre must be a union of cocircuits of m: every element of pre must
        // lie in some cocircuit contained in pre.
        Mask covered = 0;
        for (Mask c : cocircs)
            if (subset_of(c, pre)) covered |= c;
        if (covered != pre) return false;
    }
    return true;
}

bool is_morphism_flats(const Matroid& m, const Matroid& mp, const std::vector<int>& phi) {
    check_map(m, mp, phi);
    std::vector<Mask> flats = m.flats();
    for (Mask fp : mp.flats()) {
        Mask pre = preimage_mask(phi, fp);
        if (!std::binary_search(flats.begin(), flats.end(), pre)) return false;
    }
    return true;
}

Matroid pullback(const std::vector<std::string>& domain, const std::vector<int>& phi,
                 const Matroid& target) {
    int n = static_cast<int>(domain.size());
    if (static_cast<int>(phi.size()) != n)
        throw precondition_error("pullback: map is not total on the domain");
    for (int v : phi)
        if (v < 0 || v >= target.n()) throw precondition_error("pullback: image out of range");
    Mask full = full_mask(n);
    int r = target.rank_of(image_mask(phi, full));
    std::vector<Mask> bases;
    for_each_ksubset(n, r, [&](Mask t) {
        if (target.rank_of(image_mask(phi, t)) == r && static_cast<int>(popcount(t)) == r)
            bases.push_back(t);
    });
    // r(T) = r'(phi(T)) is unit-increasing and submodular, so the size-r sets
    // of full pullback rank are exactly the bases.
    return Matroid::from_bases(domain, std::move(bases));
}

bool is_quotient(const Matroid& m, const Matroid& n) {
    if (m.ground() != n.ground()) throw precondition_error("is_quotient: ground sets differ");
    std::vector<int> id(m.n());
    for (int i = 0; i < m.n(); ++i) id[i] = i;
    return is_morphism_rank(m, n, id);
}

MatroidMorphism MatroidMorphism::make(Matroid source, Matroid target, std::vector<int> map) {
    if (!is_morphism_rank(source, target, map))
        throw precondition_error("MatroidMorphism: map is not a morphism");
    return MatroidMorphism(std::move(source), std::move(target), std::move(map));
}

Mask MatroidMorphism::image_of(Mask t) const { return image_mask(map_, t); }

Matroid pullback(const MatroidMorphism& phi) {
    return pullback(phi.source().ground(), phi.map(), phi.target());
}

int nullity(const MatroidMorphism& phi) {
    return phi.source().rank() - pullback(phi).rank();
}

std::vector<Mask> bases_of_morphism(const MatroidMorphism& phi) {
    const Matroid& m = phi.source();
    const Matroid& mp = phi.target();
    int rp = mp.rank();
    Mask full = full_mask(m.n());
    std::vector<Mask> out;
    for (Mask t = 0;; ++t) {
        if (m.is_independent(t) && mp.rank_of(phi.image_of(t)) == rp) out.push_back(t);
        if (t == full) break;
    }
    return out;
}

std::vector<long> basis_counts(const MatroidMorphism& phi) {
    std::vector<long> counts(phi.source().rank() + 1, 0);
    for (Mask t : bases_of_morphism(phi)) ++counts[popcount(t)];
    return counts;
}

Matroid tilde_matroid(const MatroidMorphism& phi) {
    const Matroid& m = phi.source();
    if (phi.target().rank_of(phi.image_of(full_mask(m.n()))) != phi.target().rank())
        throw precondition_error("tilde_matroid: phi(F) does not span the target");
    int r = m.rank();
    std::unordered_set<std::string> used(m.ground().begin(), m.ground().end());
    std::vector<std::string> ground;
    for (int i = 0; i < r; ++i) {
        std::string l = "q" + std::to_string(i);
        while (used.count(l)) l += "'";
        used.insert(l);
        ground.push_back(l);
    }
    ground.insert(ground.end(), m.ground().begin(), m.ground().end());
    std::vector<Mask> bases;
    for (Mask t : bases_of_morphism(phi)) {
        int k = popcount(t);
        for_each_ksubset(r, r - k, [&](Mask s) { bases.push_back(s | (t << r)); });
    }
    return Matroid::from_bases(std::move(ground), std::move(bases));
}

}  // namespace bimat

#include "bimat/matroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "bimat/errors.hpp"

namespace bimat {

namespace {

// Membership bitmap for subset families; n is kept small enough that 2^n
// bits are cheap (enumeration ops refuse n > 25).
std::vector<bool> family_bitmap(const std::vector<Mask>& fam, int n) {
    std::vector<bool> in(size_t{1} << n, false);
    for (Mask b : fam) in[b] = true;
    return in;
}

void check_enumerable(int n, const char* what) {
    if (n > 25) throw precondition_error(std::string(what) + ": ground set too large to enumerate");
}

// Remaps masks from an old index space to the positions of the kept elements.
// keep lists old indices in increasing order.
Mask remap(Mask s, const std::vector<int>& keep) {
    Mask out = 0;
    for (size_t i = 0; i < keep.size(); ++i)
        if (s & (1u << keep[i])) out |= (1u << i);
    return out;
}

}  // namespace

BasisCheck validate_bases(const std::vector<Mask>& bases, int n) {
    BasisCheck out;
    if (bases.empty()) {
        out.valid = false;
        out.reason = "empty basis family";
        return out;
    }
    check_enumerable(n, "validate_bases");
    int r = popcount(bases[0]);
    for (Mask b : bases) {
        if (popcount(b) != r) {
            out.valid = false;
            out.reason = "bases not equicardinal";
            out.B = bases[0];
            out.B2 = b;
            return out;
        }
        if (!subset_of(b, full_mask(n))) {
            out.valid = false;
            out.reason = "basis not contained in ground set";
            out.B = b;
            return out;
        }
    }
    auto in = family_bitmap(bases, n);
    for (Mask B : bases)
        for (Mask B2 : bases) {
            Mask diff = B & ~B2;
            for (Mask dx = diff; dx; dx &= dx - 1) {
                int x = std::countr_zero(dx);
                bool ok = false;
                for (Mask dy = B2 & ~B; dy && !ok; dy &= dy - 1) {
                    int y = std::countr_zero(dy);
                    ok = in[(B & ~(1u << x)) | (1u << y)];
                }
                if (!ok) {
                    out.valid = false;
                    out.reason = "exchange fails";
                    out.B = B;
                    out.B2 = B2;
                    out.x = x;
                    return out;
                }
            }
        }
    return out;
}

Matroid Matroid::from_bases(std::vector<std::string> ground, std::vector<Mask> bases) {
    if (static_cast<int>(ground.size()) > max_ground())
        throw precondition_error("Matroid: ground set exceeds cap");
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : ground)
            if (!seen.insert(l).second)
                throw precondition_error("Matroid: duplicate ground label '" + l + "'");
    }
    if (bases.empty()) throw precondition_error("Matroid: empty basis family");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    int r = popcount(bases[0]);
    Mask full = full_mask(static_cast<int>(ground.size()));
    for (Mask b : bases) {
        if (popcount(b) != r) throw precondition_error("Matroid: bases not equicardinal");
        if (!subset_of(b, full)) throw precondition_error("Matroid: basis outside ground set");
    }
    Matroid m;
    m.ground_ = std::move(ground);
    m.bases_ = std::move(bases);
    m.rank_ = r;
    return m;
}

bool Matroid::is_basis(Mask b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
}

int Matroid::rank_of(Mask s) const {
    int best = 0;
    for (Mask b : bases_) best = std::max(best, popcount(b & s));
    return best;
}

int Matroid::label_index(const std::string& lbl) const {
    for (size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == lbl) return static_cast<int>(i);
    return -1;
}

std::vector<Mask> Matroid::independent_sets() const {
    check_enumerable(n(), "independent_sets");
    std::vector<bool> ind(size_t{1} << n(), false);
    for (Mask b : bases_)
        for_each_submask(b, [&](Mask t) { ind[t] = true; });
    std::vector<Mask> out;
    for (size_t s = 0; s < ind.size(); ++s)
        if (ind[s]) out.push_back(static_cast<Mask>(s));
    return out;
}

std::vector<Mask> Matroid::flats() const {
    check_enumerable(n(), "flats");
    std::vector<Mask> out;
    Mask full = full_mask(n());
    for (Mask s = 0; s <= full; ++s) {
        int rs = rank_of(s);
        bool flat = true;
        for (Mask rest = full & ~s; rest && flat; rest &= rest - 1) {
            int e = std::countr_zero(rest);
            if (rank_of(s | (1u << e)) == rs) flat = false;
        }
        if (flat) out.push_back(s);
        if (s == full) break;
    }
    return out;
}

std::vector<Mask> Matroid::circuits() const {
    check_enumerable(n(), "circuits");
    std::vector<Mask> out;
    Mask full = full_mask(n());
    for (Mask s = 1; s <= full && full != 0; ++s) {
        if (!is_independent(s)) {
            bool minimal = true;
            for (Mask d = s; d && minimal; d &= d - 1) {
                int e = std::countr_zero(d);
                if (!is_independent(s & ~(1u << e))) minimal = false;
            }
            if (minimal) out.push_back(s);
        }
        if (s == full) break;
    }
    std::stable_sort(out.begin(), out.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    return out;
}

std::vector<Mask> Matroid::cocircuits() const { return dual().circuits(); }

Matroid Matroid::dual() const {
    Mask full = full_mask(n());
    std::vector<Mask> co;
    co.reserve(bases_.size());
    for (Mask b : bases_) co.push_back(full & ~b);
    return from_bases(ground_, std::move(co));
}

Matroid Matroid::deleted(Mask s) const {
    Mask keep_mask = full_mask(n()) & ~s;
    auto keep = mask_to_indices(keep_mask);
    int r = rank_of(keep_mask);
    std::vector<Mask> nb;
    for_each_ksubset(static_cast<int>(keep.size()), r, [&](Mask t) {
        // t is in the new index space; lift to the old one to query rank
        Mask lifted = 0;
        for (int i : mask_to_indices(t)) lifted |= (1u << keep[i]);
        if (rank_of(lifted) == r) nb.push_back(t);
    });
    std::vector<std::string> labels;
    for (int i : keep) labels.push_back(ground_[i]);
    return from_bases(std::move(labels), std::move(nb));
}

Matroid Matroid::contracted(Mask s) const {
    // Greedy by ascending element: the lexicographically least maximal
    // independent subset of s.
    Mask is = 0;
    for (Mask d = s; d; d &= d - 1) {
        int e = std::countr_zero(d);
        if (is_independent(is | (1u << e))) is |= (1u << e);
    }
    Mask keep_mask = full_mask(n()) & ~s;
    auto keep = mask_to_indices(keep_mask);
    std::vector<Mask> nb;
    for (Mask b : bases_)
        if ((b & s) == is) nb.push_back(remap(b & keep_mask, keep));
    std::vector<std::string> labels;
    for (int i : keep) labels.push_back(ground_[i]);
    return from_bases(std::move(labels), std::move(nb));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    std::vector<std::string> labels = a.ground();
    labels.insert(labels.end(), b.ground().begin(), b.ground().end());
    std::vector<Mask> nb;
    nb.reserve(a.bases().size() * b.bases().size());
    for (Mask x : a.bases())
        for (Mask y : b.bases()) nb.push_back(x | (y << a.n()));
    return Matroid::from_bases(std::move(labels), std::move(nb));
}

Matroid matroid_union(const Matroid& a, const Matroid& b) {
    if (a.ground() != b.ground())
        throw precondition_error("matroid_union: ground sets differ");
    int n = a.n();
    check_enumerable(n, "matroid_union");
    size_t sz = size_t{1} << n;
    std::vector<int> ra(sz, 0), rb(sz, 0);
    for (size_t s = 0; s < sz; ++s) {
        ra[s] = a.rank_of(static_cast<Mask>(s));
        rb[s] = b.rank_of(static_cast<Mask>(s));
    }
    std::vector<int> ru(sz, 0);
    for (size_t s = 0; s < sz; ++s) {
        int best = popcount(static_cast<Mask>(s));  // T = empty
        for_each_submask(static_cast<Mask>(s), [&](Mask t) {
            int v = popcount(static_cast<Mask>(s) & ~t) + ra[t] + rb[t];
            if (v < best) best = v;
        });
        ru[s] = best;
    }
    int r = ru[sz - 1];
    std::vector<Mask> nb;
    for (size_t s = 0; s < sz; ++s)
        if (popcount(static_cast<Mask>(s)) == r && ru[s] == r) nb.push_back(static_cast<Mask>(s));
    return Matroid::from_bases(a.ground(), std::move(nb));
}

Matroid uniform_matroid(int r, int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return uniform_matroid(r, std::move(labels));
}

Matroid uniform_matroid(int r, std::vector<std::string> ground) {
    int n = static_cast<int>(ground.size());
    if (r < 0 || r > n) throw precondition_error("uniform_matroid: rank out of range");
    std::vector<Mask> bases;
    for_each_ksubset(n, r, [&](Mask s) { bases.push_back(s); });
    return Matroid::from_bases(std::move(ground), std::move(bases));
}

}  // namespace bimat

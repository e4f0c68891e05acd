#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace bimat {

// Subsets of ground sets are bit masks; bit i is element i in ground order.
using Mask = uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n == 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1u); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask indices_to_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= (1u << i);
    return m;
}

// Calls f(T) for every subset T of s, including 0 and s itself.
template <typename F>
void for_each_submask(Mask s, F&& f) {
    Mask t = s;
    while (true) {
        f(t);
        if (t == 0) break;
        t = (t - 1) & s;
    }
}

// Calls f(S) for every k-element subset of {0..n-1}, in increasing mask order
// (Gosper's hack).
template <typename F>
void for_each_ksubset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        f(Mask{0});
        return;
    }
    Mask s = full_mask(k);
    Mask limit = 1u << n;
    while (s < limit) {
        f(s);
        Mask c = s & (0u - s);
        Mask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

// Hard cap on combined ground size.  Overridable through the environment
// variable BIMATROID_MAX_GROUND (expert use; masks stay 32-bit).
inline int max_ground() {
    static const int cap = [] {
        if (const char* e = std::getenv("BIMATROID_MAX_GROUND")) {
            int v = std::atoi(e);
            if (v >= 1 && v <= 30) return v;
        }
        return 20;
    }();
    return cap;
}

}  // namespace bimat

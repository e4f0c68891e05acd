#pragma once

#include <cstdint>

namespace bimat {

// SplitMix64.  Chosen over std::mt19937_64 because the exact output stream is
// part of this library's reproducibility contract: identical seeds must give
// byte-identical reports across platforms and standard library versions.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : s_(seed) {}

    uint64_t next() {
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by modulo.  The slight bias (< 2^-48 for our n) is
    // irrelevant here; determinism and simplicity are what matter.
    uint64_t below(uint64_t n) { return next() % n; }

    // Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }

  private:
    uint64_t s_;
};

inline uint64_t mix64(uint64_t x) {
    SplitMix64 g(x);
    return g.next();
}

// Per-trial generator: trial i of a seeded corpus draws from an independent
// stream, so corpora are stable under reordering or parallel evaluation.
inline SplitMix64 trial_rng(uint64_t seed, uint64_t trial) {
    return SplitMix64(mix64(seed ^ mix64(trial + 0x51ed270b0a1ce287ULL)));
}

}  // namespace bimat

#pragma once

#include <cstdint>
#include <string>

#include "bimat/errors.hpp"

namespace bimat {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Primality is checked once per distinct modulus (memoized), so element
// construction stays cheap.
inline void ensure_prime(uint32_t p) {
    thread_local uint32_t last_ok = 0;
    if (p == last_ok) return;
    if (p < 2 || p > (1u << 31) || !is_prime_u32(p))
        throw precondition_error("Fp: modulus " + std::to_string(p) + " is not a prime <= 2^31");
    last_ok = p;
}

// Element of GF(p) carrying its modulus.  value is the canonical
// representative in [0, p).  Mixed-modulus arithmetic is a precondition
// violation.  p stays below 2^31 so that products fit in uint64_t.
class Fp {
  public:
    Fp() : v_(0), p_(2) {}
    Fp(uint64_t value, uint32_t p) : p_(p) {
        ensure_prime(p);
        v_ = static_cast<uint32_t>(value % p);
    }
    static Fp from_int(long long value, uint32_t p) {
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += p;
        return Fp(static_cast<uint64_t>(r), p);
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    std::string str() const { return std::to_string(v_); }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) { check(o); v_ = add(v_, o.v_); return *this; }
    Fp& operator-=(const Fp& o) { check(o); v_ = add(v_, o.v_ == 0 ? 0 : p_ - o.v_); return *this; }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = static_cast<uint32_t>((static_cast<uint64_t>(v_) * o.v_) % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    Fp inverse() const {
        if (v_ == 0) throw precondition_error("Fp: inverse of zero");
        // extended Euclid on (v, p)
        int64_t t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return Fp(static_cast<uint64_t>(t), p_);
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw precondition_error("Fp: mixed moduli");
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return static_cast<uint32_t>(s >= p_ ? s - p_ : s);
    }

    uint32_t v_;
    uint32_t p_;
};

// Default modulus for random corpora: the largest prime below 2^16.
inline constexpr uint32_t kDefaultPrime = 65521;

}  // namespace bimat

#pragma once

// Arithmetic in the prime field F_k with runtime modulus. The modulus is
// validated for primality at construction; composite moduli are rejected.

#include <cstdint>
#include <stdexcept>

namespace gfh {

inline bool is_prime(long k) {
    if (k < 2) return false;
    for (long d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

inline void require_prime(long k) {
    if (!is_prime(k))
        throw std::invalid_argument("modulus must be prime, got " +
                                    std::to_string(k));
}

// An element of F_k. Value is kept normalized in [0, k).
class Fp {
  public:
    Fp() : v_(0), k_(0) {}  // unusable sentinel, only for container resizing
    Fp(long value, long k) : k_(k) {
        require_prime(k);
        v_ = value % k;
        if (v_ < 0) v_ += k;
    }

    long value() const { return v_; }
    long modulus() const { return k_; }
    bool is_zero() const { return v_ == 0; }

    static Fp zero(long k) { return Fp(0, k); }
    static Fp one(long k) { return Fp(1, k); }

    Fp operator+(const Fp& o) const { return with((v_ + o.checked(k_)) % k_); }
    Fp operator-(const Fp& o) const {
        return with((v_ - o.checked(k_) + k_) % k_);
    }
    Fp operator*(const Fp& o) const { return with((v_ * o.checked(k_)) % k_); }
    Fp operator-() const { return with((k_ - v_) % k_); }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of 0 in F_k");
        // Fermat: v^(k-2) mod k
        long result = 1, base = v_, e = k_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % k_;
            base = base * base % k_;
            e >>= 1;
        }
        return with(result);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    bool operator==(const Fp& o) const = default;

  private:
    Fp with(long v) const {
        Fp r;
        r.v_ = v;
        r.k_ = k_;
        return r;
    }
    long checked(long k) const {
        if (k_ != k) throw std::invalid_argument("mixed field moduli");
        return v_;
    }

    long v_;
    long k_;
};

}  // namespace gfh

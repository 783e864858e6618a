#pragma once

// The ring R = F_k[T]/(T^k - 1) and its distinguished elements T^m - 1 and
// the norm 1 + T + ... + T^{k-1}. These are the boundary coefficients of all
// block complexes; multiplication by a ring element is realized as a k x k
// circulant matrix in the fixed basis (1, T, ..., T^{k-1}).

#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace gfh {

class GroupRingElement {
  public:
    explicit GroupRingElement(long k) : k_(k), c_(k, Fp::zero(k)) {
        require_prime(k);
    }

    long modulus() const { return k_; }
    const Fp& coeff(long i) const { return c_[mod(i)]; }
    void set_coeff(long i, Fp v) { c_[mod(i)] = v; }

    static GroupRingElement zero(long k) { return GroupRingElement(k); }
    static GroupRingElement one(long k) {
        GroupRingElement r(k);
        r.c_[0] = Fp::one(k);
        return r;
    }
    static GroupRingElement t_power(long m, long k) {
        GroupRingElement r(k);
        r.set_coeff(m, Fp::one(k));
        return r;
    }

    GroupRingElement operator+(const GroupRingElement& o) const {
        check(o);
        GroupRingElement r(k_);
        for (long i = 0; i < k_; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    GroupRingElement operator-(const GroupRingElement& o) const {
        check(o);
        GroupRingElement r(k_);
        for (long i = 0; i < k_; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    // cyclic convolution
    GroupRingElement operator*(const GroupRingElement& o) const {
        check(o);
        GroupRingElement r(k_);
        for (long i = 0; i < k_; ++i) {
            if (c_[i].is_zero()) continue;
            for (long j = 0; j < k_; ++j)
                r.c_[(i + j) % k_] = r.c_[(i + j) % k_] + c_[i] * o.c_[j];
        }
        return r;
    }

    bool operator==(const GroupRingElement& o) const = default;
    bool is_zero() const {
        for (const Fp& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    // Matrix of x -> x * r in the basis (1, T, ..., T^{k-1}).
    FpMatrix multiplication_matrix() const {
        FpMatrix m(k_, k_, Fp::zero(k_));
        for (long i = 0; i < k_; ++i)
            for (long j = 0; j < k_; ++j)
                m.at(i, j) = c_[mod(i - j)];
        return m;
    }

    // Integer-coefficient lift with entries in {0, ..., k-1}, as a circulant.
    // Needed for the Z-coefficient quotient complexes, where the norm lifts
    // to multiplication by k.
    IntMatrix integral_multiplication_matrix() const {
        IntMatrix m(k_, k_, Int(0));
        for (long i = 0; i < k_; ++i)
            for (long j = 0; j < k_; ++j)
                m.at(i, j) = c_[mod(i - j)].value();
        return m;
    }

    // The augmentation T -> 1, i.e. the sum of coefficients. Over F_k the
    // norm maps to 0; its integral lift maps to k.
    Fp augmentation() const {
        Fp s = Fp::zero(k_);
        for (const Fp& x : c_) s = s + x;
        return s;
    }
    Int integral_augmentation() const {
        Int s = 0;
        for (const Fp& x : c_) s += x.value();
        return s;
    }

  private:
    long mod(long i) const { return ((i % k_) + k_) % k_; }
    void check(const GroupRingElement& o) const {
        if (k_ != o.k_) throw std::invalid_argument("mixed group rings");
    }

    long k_;
    std::vector<Fp> c_;
};

// T^m - 1. The valid lens weights are nonzero mod k; m == 0 mod k would make
// the boundary map vanish and is rejected.
inline GroupRingElement tpow_minus_one(long m, long k) {
    require_prime(k);
    if (m % k == 0)
        throw std::invalid_argument("weight must be nonzero mod k");
    GroupRingElement r(k);
    long mm = ((m % k) + k) % k;
    r.set_coeff(mm, Fp::one(k));
    r.set_coeff(0, r.coeff(0) - Fp::one(k));
    return r;
}

// 1 + T + ... + T^{k-1}. Annihilates every T^m - 1 (telescoping).
inline GroupRingElement norm_element(long k) {
    require_prime(k);
    GroupRingElement r(k);
    for (long i = 0; i < k; ++i) r.set_coeff(i, Fp::one(k));
    return r;
}

inline FpMatrix as_multiplication_matrix(const GroupRingElement& r) {
    return r.multiplication_matrix();
}

}  // namespace gfh

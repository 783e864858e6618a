#pragma once

// Builders for the filtered block complexes of radial Hamiltonians: for each
// sphere stratum a free module block over F_k[T]/(T^k - 1) spanning 2n
// consecutive degrees, with boundaries alternating between multiplication by
// T^w - 1 and by the norm, plus an isolated generator at degree 0 (the
// behavior at infinity) and the attaching generator of the origin stratum.
// The equivariant (free-quotient) form collapses each block to one generator
// per degree, with T^w - 1 inducing 0 and the norm inducing multiplication
// by k.

#include <set>
#include <stdexcept>
#include <vector>

#include "chain.hpp"
#include "group_ring.hpp"
#include "rational.hpp"

namespace gfh {

struct LensData {
    long n = 1;        // complex dimension
    long k = 2;        // prime order of the cyclic group
    std::vector<long> weights;  // w_0..w_{n-1}, each nonzero mod k

    LensData(long n_, long k_, std::vector<long> w)
        : n(n_), k(k_), weights(std::move(w)) {
        require_prime(k);
        if (n < 1) throw std::invalid_argument("need n >= 1");
        if (static_cast<long>(weights.size()) != n)
            throw std::invalid_argument("need n weights");
        for (long w_ : weights)
            if (w_ % k == 0)
                throw std::invalid_argument("weights must be coprime to k");
    }
};

// Critical data of the radial profile: R, the radii r_1 > ... > r_nu of the
// sphere strata and the profile values there, and the value at 0. The
// complex depends only on this data, never on a functional form of the
// profile.
class Profile {
  public:
    Profile(Rational R, std::vector<Rational> radii,
            std::vector<Rational> values, Rational rho0)
        : R_(std::move(R)),
          radii_(std::move(radii)),
          values_(std::move(values)),
          rho0_(std::move(rho0)) {
        if (!(R_ > 0)) throw std::invalid_argument("R must be positive");
        if (radii_.empty() || radii_.size() != values_.size())
            throw std::invalid_argument("radii/values size mismatch");
        for (std::size_t i = 0; i < radii_.size(); ++i) {
            if (!(radii_[i] > 0 && radii_[i] < 1))
                throw std::invalid_argument("radii must lie in (0,1)");
            if (i > 0 && !(radii_[i] < radii_[i - 1]))
                throw std::invalid_argument("radii must strictly decrease");
        }
        Rational prev = 0;
        for (long j = 1; j <= nu(); ++j) {
            Rational c = critical_value(j);
            if (!(c > 0 && c < Rational(j) * R_))
                throw std::invalid_argument("need 0 < c_j < jR");
            if (!(c > prev))
                throw std::invalid_argument("critical values must increase");
            prev = c;
        }
        if (!(rho0_ > prev))
            throw std::invalid_argument("rho(0) must exceed all c_j");
    }

    const Rational& R() const { return R_; }
    long nu() const { return static_cast<long>(radii_.size()); }
    const Rational& radius(long j) const { return radii_.at(j - 1); }
    const Rational& value(long j) const { return values_.at(j - 1); }
    const Rational& rho0() const { return rho0_; }

    // c_j = j R r_j + rho(r_j)
    Rational critical_value(long j) const {
        return Rational(j) * R_ * radius(j) + value(j);
    }

  private:
    Rational R_;
    std::vector<Rational> radii_;
    std::vector<Rational> values_;
    Rational rho0_;
};

struct CriticalStratum {
    Stratum stratum;
    long base_index = 0;  // 2jn for Sphere(j), 2(nu+1)n for Origin, 0 at infinity
    Rational value;
    bool operator==(const CriticalStratum&) const = default;
};

inline std::vector<CriticalStratum> critical_data(const Profile& p,
                                                  const LensData& lens) {
    std::vector<CriticalStratum> out;
    out.push_back({Stratum{StratumKind::Infinity}, 0, Rational(0)});
    for (long j = 1; j <= p.nu(); ++j)
        out.push_back({Stratum{StratumKind::Sphere, j}, 2 * j * lens.n,
                       p.critical_value(j)});
    out.push_back(
        {Stratum{StratumKind::Origin}, 2 * (p.nu() + 1) * lens.n, p.rho0()});
    return out;  // sorted by value: 0 < c_1 < ... < c_nu < rho(0)
}

namespace detail {

inline IntMatrix lift(const FpMatrix& m) {
    IntMatrix r(m.rows(), m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = m.at(i, j).value();
    return r;
}

}  // namespace detail

inline GradedChainComplex build_nonequivariant_complex(const Profile& p,
                                                       const LensData& lens) {
    const long n = lens.n, k = lens.k, nu = p.nu();
    GradedChainComplex c(Coeff::Fk, k);

    c.add_generator(
        {Stratum{StratumKind::Infinity}, 0, 0, Rational(0), 0});
    for (long j = 1; j <= nu; ++j) {
        Rational cj = p.critical_value(j);
        for (long i = 0; i < 2 * n; ++i)
            for (long orb = 0; orb < k; ++orb)
                c.add_generator(
                    {Stratum{StratumKind::Sphere, j}, i, 2 * j * n + i, cj, orb});
    }
    const long origin_degree = 2 * (nu + 1) * n;
    c.add_generator(
        {Stratum{StratumKind::Origin}, 0, origin_degree, p.rho0(), 0});

    const GroupRingElement norm = norm_element(k);
    for (long j = 1; j <= nu; ++j) {
        for (long i = 0; i < 2 * n; ++i) {
            long d = 2 * j * n + i;
            if (c.dim(d - 1) == 0) continue;  // bottom of block 1
            if (i % 2 == 1) {
                // odd inner degree 2t+1 -> 2t: multiplication by T^{w_t}-1
                long t = (i - 1) / 2;
                c.set_boundary(d, detail::lift(as_multiplication_matrix(
                                      tpow_minus_one(lens.weights[t], k))));
            } else {
                // even inner degree (within block, or the bottom of block j
                // mapping onto the top of block j-1): multiplication by norm
                c.set_boundary(
                    d, detail::lift(as_multiplication_matrix(norm)));
            }
        }
    }
    // Origin attaching map: the norm of the top generators of block nu. This
    // is the unique choice (up to unit) with d^2 = 0 whose full-range
    // homology is that of S^{2n}; asserted in tests.
    IntMatrix attach(k, 1, Int(0));
    for (long i = 0; i < k; ++i) attach.at(i, 0) = 1;
    c.set_boundary(origin_degree, attach);
    return c;
}

inline GradedChainComplex build_equivariant_complex(const Profile& p,
                                                    const LensData& lens,
                                                    Coeff coeff) {
    const long n = lens.n, k = lens.k, nu = p.nu();
    GradedChainComplex c(coeff, k);
    for (long j = 1; j <= nu; ++j) {
        Rational cj = p.critical_value(j);
        for (long i = 0; i < 2 * n; ++i)
            c.add_generator(
                {Stratum{StratumKind::Sphere, j}, i, 2 * j * n + i, cj, -1});
    }
    for (long j = 1; j <= nu; ++j) {
        for (long i = 0; i < 2 * n; ++i) {
            long d = 2 * j * n + i;
            if (c.dim(d - 1) == 0) continue;
            IntMatrix b(1, 1, Int(0));
            // T^w - 1 augments to 0; the norm augments to k
            b.at(0, 0) = (i % 2 == 1) ? Int(0) : Int(k);
            c.set_boundary(d, b);
        }
    }
    // Valid only away from the fixed-point strata at 0 and rho(0).
    c.restrict_windows(Rational(0), p.rho0());
    return c;
}

// Synthesizes critical values c_j respecting the Profile invariants and the
// window membership c_j > a iff jR > a. Any synthesis with that property
// yields the same homology tables; `shrink` in (0,1] selects among them.
inline Profile synthesize_profile(long n, const Rational& R, const Rational& a,
                                  long max_degree,
                                  const Rational& shrink = Rational(1)) {
    if (!(a > 0) || !(R > 0)) throw std::invalid_argument("need a, R > 0");
    if (!(shrink > 0) || shrink > 1)
        throw std::invalid_argument("shrink must lie in (0,1]");
    Rational ratio = a / R;
    if (boost::multiprecision::denominator(ratio) == 1)
        throw std::invalid_argument("a/R must not be an integer");
    long l = static_cast<long>(Int(boost::multiprecision::numerator(ratio) /
                                   boost::multiprecision::denominator(ratio))) +
             1;
    long nu = std::max(max_degree / (2 * n) + 1, l);

    std::vector<Rational> radii, values;
    for (long j = 1; j <= nu; ++j) {
        Rational jr = Rational(j) * R;
        Rational dist = jr > a ? jr - a : a - jr;
        Rational c = jr - shrink * std::min(R, dist) / Rational(j + 2);
        Rational r(nu + 1 - j, nu + 1);
        radii.push_back(r);
        values.push_back(c - jr * r);
    }
    return Profile(R, radii, values, Rational(nu) * R + 1);
}

inline HomologyTable truncate(const HomologyTable& t, long max_degree) {
    HomologyTable out;
    for (const auto& [d, e] : t.entries())
        if (d <= max_degree) out.set(d, e);
    return out;
}

struct StabilizedTable {
    HomologyTable table;
    std::set<long> tower_sensitive;  // degrees == 2n-1 mod 2n, equivariant only
};

// The kappa -> infinity rule: enough sphere strata that the origin stratum
// index clears max_degree by a whole block, then the window (a, nu R]
// truncated to the requested degrees.
inline StabilizedTable stabilized_homology(const LensData& lens,
                                           const Rational& R, const Rational& a,
                                           long max_degree, bool equivariant,
                                           Coeff coeff = Coeff::Fk,
                                           const Rational& shrink = Rational(1)) {
    if (max_degree < 1) throw std::invalid_argument("need max_degree >= 1");
    Profile p = synthesize_profile(lens.n, R, a, max_degree, shrink);
    GradedChainComplex c =
        equivariant ? build_equivariant_complex(p, lens, coeff)
                    : build_nonequivariant_complex(p, lens);
    Rational b = Rational(p.nu()) * R;
    StabilizedTable out;
    out.table = truncate(homology(window_subquotient(c, a, b)), max_degree);
    if (equivariant)
        for (long d = 1; d <= max_degree; ++d)
            if (d % (2 * lens.n) == 2 * lens.n - 1)
                out.tower_sensitive.insert(d);
    return out;
}

}  // namespace gfh

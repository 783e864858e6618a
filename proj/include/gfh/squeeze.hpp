#pragma once

// Decision procedures for the squeezing questions about prequantized balls
// in R^2n x S^1. The equivariant obstruction finds an integer l with
// R' < 1/l < R and exhibits the contradiction diagram: the homology of the
// big and the intermediate ball at degree 2nl is nonzero while the small
// ball's vanishes, so the inclusion-induced map cannot factor through it.

#include <optional>
#include <stdexcept>

#include "oracles.hpp"
#include "rational.hpp"

namespace gfh {

enum class SqueezeStatus { Obstructed, SqueezablePerEKP, NoVerdict };

inline const char* to_string(SqueezeStatus s) {
    switch (s) {
        case SqueezeStatus::Obstructed: return "Obstructed";
        case SqueezeStatus::SqueezablePerEKP: return "SqueezablePerEKP";
        case SqueezeStatus::NoVerdict: return "NoVerdict";
    }
    return "?";
}

struct DiagramRanks {
    long big = 0;    // prequantized B(R''), any R'' > R
    long mid = 0;    // prequantized B(R)
    long small = 0;  // prequantized B(R')
    bool operator==(const DiagramRanks&) const = default;
};

struct SqueezeVerdict {
    SqueezeStatus status = SqueezeStatus::NoVerdict;
    std::optional<long> witness;  // l (equivariant) or the integer m
    std::optional<long> degree;   // 2nl at the witness
    std::optional<DiagramRanks> diagram;
};

// The a = 1 convention of the non-squeezing diagram. Smallest admissible
// witness reported.
inline SqueezeVerdict equivariant_verdict(long n, long k, const Rational& R,
                                          const Rational& Rp,
                                          const Rational& a = Rational(1)) {
    require_prime(k);
    if (!(Rp > 0) || !(Rp < R)) throw std::invalid_argument("need 0 < Rp < R");
    // find smallest l >= 1 with Rp < 1/l < R
    SqueezeVerdict v;
    for (long l = 1; a / l > Rp; ++l) {
        if (!(a / l < R)) continue;
        v.status = SqueezeStatus::Obstructed;
        v.witness = l;
        v.degree = 2 * n * l;
        auto preq_rank = [&](const Rational& radius) {
            // prequantized equivariant ball homology at the witness degree
            long r = balls_homology_eq({n, k, radius, a, *v.degree, true});
            if (*v.degree > 1)
                r += balls_homology_eq({n, k, radius, a, *v.degree - 1, true});
            return r;
        };
        v.diagram = DiagramRanks{preq_rank(R + 1), preq_rank(R), preq_rank(Rp)};
        return v;
    }
    return v;
}

// Integer obstruction R' <= m <= R; the EKP squeezing
// regime n > 1, R < 1; everything in dimension 3 (n = 1) is rigid, reported
// as obstructed without an integer witness.
inline SqueezeVerdict nonequivariant_verdict(long n, const Rational& R,
                                             const Rational& Rp) {
    if (!(Rp > 0) || !(Rp < R)) throw std::invalid_argument("need 0 < Rp < R");
    SqueezeVerdict v;
    Int m_low = boost::multiprecision::numerator(Rp) /
                boost::multiprecision::denominator(Rp);
    if (Rational(m_low) < Rp) ++m_low;  // ceil(Rp)
    if (m_low >= 1 && Rational(m_low) <= R) {
        v.status = SqueezeStatus::Obstructed;
        v.witness = static_cast<long>(m_low);
        return v;
    }
    if (n == 1) {
        v.status = SqueezeStatus::Obstructed;  // dimension-3 rigidity
        return v;
    }
    if (R < 1) {
        v.status = SqueezeStatus::SqueezablePerEKP;
        return v;
    }
    return v;
}

}  // namespace gfh

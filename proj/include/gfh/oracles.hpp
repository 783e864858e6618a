#pragma once

// Closed-form homology tables: the symplectic homology of balls in the
// non-equivariant and equivariant case, lens space homology, and the
// prequantization rule (tensoring with the homology of the circle). These
// serve as ground truth for the chain-level computations and feed the
// squeeze verdicts.

#include <stdexcept>

#include "chain.hpp"
#include "morse_bott.hpp"
#include "rational.hpp"

namespace gfh {

struct OracleQuery {
    long n = 1;
    long k = 2;
    Rational R;
    Rational a;
    long degree = 0;
    bool equivariant = false;
};

// Non-equivariant: rank 1 exactly at degree 2nl for the positive integer l
// with a/l <= R < a/(l-1) (for l = 1 the upper condition is vacuous).
inline long balls_homology(const OracleQuery& q) {
    if (q.degree < 1) throw std::invalid_argument("need degree >= 1");
    if (!(q.R > 0) || !(q.a > 0)) throw std::invalid_argument("need R, a > 0");
    if (q.degree % (2 * q.n) != 0) return 0;
    long l = q.degree / (2 * q.n);
    if (l < 1) return 0;
    if (!(q.R >= q.a / l)) return 0;
    if (l > 1 && !(q.R < q.a / (l - 1))) return 0;
    return 1;
}

// Equivariant: rank 1 iff some positive integer l has R >= a/l and
// 2nl <= degree < 2n(l+1) - 1.
inline long balls_homology_eq(const OracleQuery& q) {
    if (q.degree < 1) throw std::invalid_argument("need degree >= 1");
    if (!(q.R > 0) || !(q.a > 0)) throw std::invalid_argument("need R, a > 0");
    long two_n = 2 * q.n;
    long l = q.degree / two_n;
    if (l < 1) return 0;
    if (q.degree >= two_n * (l + 1) - 1) return 0;  // degree == 2n(l+1)-1
    return q.R >= q.a / l ? 1 : 0;
}

// Homology of the lens space L^{2n-1}: over F_k rank 1 in every degree
// 0..2n-1; over Z free in degrees 0 and 2n-1 with Z/k torsion in the odd
// degrees below the top.
inline HomologyTable lens_homology(const LensData& lens, Coeff coeff) {
    HomologyTable t;
    long top = 2 * lens.n - 1;
    if (coeff == Coeff::Fk) {
        for (long d = 0; d <= top; ++d) t.set(d, {1, {}});
        return t;
    }
    t.set(0, {1, {}});
    t.set(top, {1, {}});
    for (long d = 1; d < top; d += 2) t.set(d, {0, {Int(lens.k)}});
    return t;
}

// Tensor with H_*(S^1): rank at degree d becomes rank(d) + rank(d-1), and
// torsion carries over from both degrees (the circle's homology is free, so
// there is no Tor correction).
inline HomologyTable prequantize(const HomologyTable& t) {
    HomologyTable out;
    std::map<long, HomologyEntry> acc;
    for (const auto& [d, e] : t.entries()) {
        for (long shift : {0L, 1L}) {
            HomologyEntry& dst = acc[d + shift];
            dst.rank += e.rank;
            dst.torsion.insert(dst.torsion.end(), e.torsion.begin(),
                               e.torsion.end());
        }
    }
    for (auto& [d, e] : acc) {
        std::sort(e.torsion.begin(), e.torsion.end());
        out.set(d, e);
    }
    return out;
}

}  // namespace gfh

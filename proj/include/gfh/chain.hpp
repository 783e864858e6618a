#pragma once

// Filtered graded chain complexes over F_k or Z, window (sublevel) subquotient
// extraction and homology. Relative homology of a window (a, b] is computed as
// the homology of the subquotient spanned by generators with a < filtration
// <= b; this is well defined because the differential strictly decreases the
// filtration value (an enforced invariant).

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace gfh {

enum class StratumKind { Sphere, Origin, Infinity, Tower };

struct Stratum {
    StratumKind kind = StratumKind::Sphere;
    long index = 0;  // j for Sphere(j), i for Tower(i); unused otherwise
    bool operator==(const Stratum&) const = default;
};

inline std::string to_string(const Stratum& s) {
    switch (s.kind) {
        case StratumKind::Sphere: return "Sphere(" + std::to_string(s.index) + ")";
        case StratumKind::Origin: return "Origin";
        case StratumKind::Infinity: return "Infinity";
        case StratumKind::Tower: return "Tower(" + std::to_string(s.index) + ")";
    }
    return "?";
}

struct Generator {
    Stratum stratum;
    long inner_degree = 0;
    long total_degree = 0;
    Rational filtration;
    long orbit = 0;  // 0..k-1, or -1 for a quotient (one-per-orbit) generator
    bool operator==(const Generator&) const = default;
};

enum class Coeff { Fk, Z };

struct HomologyEntry {
    long rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, Z coefficients only
    bool operator==(const HomologyEntry&) const = default;
};

class HomologyTable {
  public:
    long rank(long degree) const {
        auto it = e_.find(degree);
        return it == e_.end() ? 0 : it->second.rank;
    }
    std::vector<Int> torsion(long degree) const {
        auto it = e_.find(degree);
        return it == e_.end() ? std::vector<Int>{} : it->second.torsion;
    }
    void set(long degree, HomologyEntry entry) {
        if (entry.rank == 0 && entry.torsion.empty())
            e_.erase(degree);
        else
            e_[degree] = std::move(entry);
    }
    const std::map<long, HomologyEntry>& entries() const { return e_; }
    bool operator==(const HomologyTable&) const = default;

    long euler_characteristic() const {
        long chi = 0;
        for (const auto& [d, e] : e_) chi += (d % 2 == 0 ? e.rank : -e.rank);
        return chi;
    }

    // degreewise sum
    HomologyTable operator+(const HomologyTable& o) const {
        HomologyTable r = *this;
        for (const auto& [d, e] : o.e_) {
            HomologyEntry merged = r.e_.count(d) ? r.e_[d] : HomologyEntry{};
            merged.rank += e.rank;
            merged.torsion.insert(merged.torsion.end(), e.torsion.begin(),
                                  e.torsion.end());
            std::sort(merged.torsion.begin(), merged.torsion.end());
            r.set(d, merged);
        }
        return r;
    }

  private:
    std::map<long, HomologyEntry> e_;
};

struct Violation {
    std::string what;  // "d2" or "filtration"
    long degree = 0;
    std::size_t row = 0, col = 0;
};

using ValidationResult = std::optional<Violation>;  // nullopt == ok

class GradedChainComplex {
  public:
    GradedChainComplex(Coeff coeff, long prime)
        : coeff_(coeff), prime_(prime) {
        if (coeff == Coeff::Fk) require_prime(prime);
    }

    Coeff coefficients() const { return coeff_; }
    long prime() const { return prime_; }

    // Generators must be appended in the fixed deterministic order for the
    // degree; boundary matrices refer to positions in these lists.
    void add_generator(Generator g) {
        gens_[g.total_degree].push_back(std::move(g));
    }

    // boundary of degree d lands in degree d-1; rows = dim(d-1), cols = dim(d)
    void set_boundary(long degree, IntMatrix m) {
        if (m.rows() != dim(degree - 1) || m.cols() != dim(degree))
            throw std::invalid_argument("boundary shape mismatch");
        boundary_[degree] = std::move(m);
    }

    std::size_t dim(long degree) const {
        auto it = gens_.find(degree);
        return it == gens_.end() ? 0 : it->second.size();
    }
    const std::vector<Generator>& generators(long degree) const {
        static const std::vector<Generator> empty;
        auto it = gens_.find(degree);
        return it == gens_.end() ? empty : it->second;
    }
    const std::map<long, std::vector<Generator>>& all_generators() const {
        return gens_;
    }

    IntMatrix boundary(long degree) const {
        auto it = boundary_.find(degree);
        if (it != boundary_.end()) return it->second;
        return IntMatrix(dim(degree - 1), dim(degree), Int(0));
    }
    IntMatrix& mutable_boundary(long degree) {
        auto it = boundary_.find(degree);
        if (it == boundary_.end())
            it = boundary_
                     .emplace(degree, IntMatrix(dim(degree - 1), dim(degree),
                                                Int(0)))
                     .first;
        return it->second;
    }

    long min_degree() const {
        return gens_.empty() ? 0 : gens_.begin()->first;
    }
    long max_degree() const {
        return gens_.empty() ? -1 : gens_.rbegin()->first;
    }
    bool empty() const { return gens_.empty(); }

    // Admissible range for window endpoints; used by quotient complexes whose
    // chain model is only valid away from the fixed-point strata.
    void restrict_windows(Rational floor, Rational ceiling) {
        window_floor_ = std::move(floor);
        window_ceiling_ = std::move(ceiling);
    }
    const std::optional<Rational>& window_floor() const {
        return window_floor_;
    }
    const std::optional<Rational>& window_ceiling() const {
        return window_ceiling_;
    }

  private:
    Coeff coeff_;
    long prime_;
    std::map<long, std::vector<Generator>> gens_;
    std::map<long, IntMatrix> boundary_;
    std::optional<Rational> window_floor_, window_ceiling_;
};

namespace detail {

inline bool entry_nonzero(const GradedChainComplex& c, const Int& v) {
    if (c.coefficients() == Coeff::Fk) return v % c.prime() != 0;
    return v != 0;
}

}  // namespace detail

// Checks d(d(x)) == 0 (mod k in F_k mode, exactly over Z) and that every
// nonzero boundary entry decreases the filtration value. Equality is allowed
// only inside a single stratum: windows never cut through a critical value,
// so a stratum is either wholly inside or wholly outside and the subquotient
// stays a complex.
inline ValidationResult validate(const GradedChainComplex& c) {
    for (long d = c.min_degree(); d <= c.max_degree(); ++d) {
        const auto& from = c.generators(d);
        const auto& to = c.generators(d - 1);
        IntMatrix b = c.boundary(d);
        for (std::size_t i = 0; i < to.size(); ++i)
            for (std::size_t j = 0; j < from.size(); ++j) {
                if (!detail::entry_nonzero(c, b.at(i, j))) continue;
                bool ok = to[i].filtration < from[j].filtration ||
                          (to[i].filtration == from[j].filtration &&
                           to[i].stratum == from[j].stratum);
                if (!ok) return Violation{"filtration", d, i, j};
            }
        if (d + 1 <= c.max_degree()) {
            IntMatrix sq = b * c.boundary(d + 1);
            for (std::size_t i = 0; i < sq.rows(); ++i)
                for (std::size_t j = 0; j < sq.cols(); ++j)
                    if (detail::entry_nonzero(c, sq.at(i, j)))
                        return Violation{"d2", d + 1, i, j};
        }
    }
    return std::nullopt;
}

// Half-open window (a, b]; nullopt endpoints mean -inf / +inf. Both finite
// endpoints must avoid every critical (filtration) value.
inline GradedChainComplex window_subquotient(
    const GradedChainComplex& c, const std::optional<Rational>& a,
    const std::optional<Rational>& b) {
    if (a && b && !(*a < *b)) throw std::invalid_argument("need a < b");
    if (c.window_floor() &&
        (!a || !(*a > *c.window_floor()) || !b ||
         !(*b < *c.window_ceiling())))
        throw std::invalid_argument(
            "window endpoints outside the complex's admissible range");
    auto inside = [&](const Rational& f) {
        if (a && !(f > *a)) return false;
        if (b && !(f <= *b)) return false;
        return true;
    };
    for (const auto& [d, gens] : c.all_generators())
        for (const auto& g : gens) {
            if ((a && g.filtration == *a) || (b && g.filtration == *b))
                throw std::invalid_argument(
                    "window endpoint equals a critical value " +
                    to_string(g.filtration));
        }

    GradedChainComplex out(c.coefficients(), c.prime());
    std::map<long, std::vector<std::size_t>> kept;
    for (const auto& [d, gens] : c.all_generators()) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (inside(gens[i].filtration)) {
                kept[d].push_back(i);
                out.add_generator(gens[i]);
            }
    }
    for (const auto& [d, cols] : kept) {
        auto rows_it = kept.find(d - 1);
        std::vector<std::size_t> rows =
            rows_it == kept.end() ? std::vector<std::size_t>{} : rows_it->second;
        out.set_boundary(d, c.boundary(d).select(rows, cols));
    }
    return out;
}

// Homology table. Over F_k: rank_d = dim_d - rank(d_d) - rank(d_{d+1}).
// Over Z: free rank the same with ranks over Q, torsion from the invariant
// factors of d_{d+1}.
inline HomologyTable homology(const GradedChainComplex& c) {
    HomologyTable t;
    if (c.empty()) return t;
    std::map<long, long> rank_of;        // rank of boundary_d
    std::map<long, std::vector<Int>> tors_of;  // invariant factors > 1
    for (long d = c.min_degree(); d <= c.max_degree() + 1; ++d) {
        IntMatrix b = c.boundary(d);
        if (b.rows() == 0 || b.cols() == 0) {
            rank_of[d] = 0;
            continue;
        }
        if (c.coefficients() == Coeff::Fk) {
            rank_of[d] = fp_rank(reduce_mod(b, c.prime()), c.prime());
        } else {
            SmithForm s = smith_normal_form(b);
            rank_of[d] = s.rank;
            std::vector<Int> tors;
            for (const Int& f : s.invariant_factors())
                if (f > 1) tors.push_back(f);
            tors_of[d] = std::move(tors);
        }
    }
    for (long d = c.min_degree(); d <= c.max_degree(); ++d) {
        HomologyEntry e;
        e.rank = static_cast<long>(c.dim(d)) - rank_of[d] - rank_of[d + 1];
        if (c.coefficients() == Coeff::Z) e.torsion = tors_of[d + 1];
        t.set(d, e);
    }
    return t;
}

// Block-diagonal direct sum; generator order is (c1 block, c2 block) per
// degree.
inline GradedChainComplex direct_sum(const GradedChainComplex& c1,
                                     const GradedChainComplex& c2) {
    if (c1.coefficients() != c2.coefficients() || c1.prime() != c2.prime())
        throw std::invalid_argument("direct_sum: incompatible coefficients");
    GradedChainComplex out(c1.coefficients(), c1.prime());
    long lo = std::min(c1.min_degree(), c2.min_degree());
    long hi = std::max(c1.max_degree(), c2.max_degree());
    for (long d = lo; d <= hi; ++d) {
        for (const auto& g : c1.generators(d)) out.add_generator(g);
        for (const auto& g : c2.generators(d)) out.add_generator(g);
    }
    for (long d = lo; d <= hi; ++d) {
        IntMatrix b1 = c1.boundary(d), b2 = c2.boundary(d);
        IntMatrix b(b1.rows() + b2.rows(), b1.cols() + b2.cols(), Int(0));
        for (std::size_t i = 0; i < b1.rows(); ++i)
            for (std::size_t j = 0; j < b1.cols(); ++j)
                b.at(i, j) = b1.at(i, j);
        for (std::size_t i = 0; i < b2.rows(); ++i)
            for (std::size_t j = 0; j < b2.cols(); ++j)
                b.at(b1.rows() + i, b1.cols() + j) = b2.at(i, j);
        out.set_boundary(d, b);
    }
    return out;
}

struct TripleReport {
    bool ok = true;
    long degree = 0;      // first inconsistent degree
    std::string term;     // which of the three windows the failure sits at
};

// Consistency of the long exact sequence of the triple
// E^{a1} in E^{a2} in E: degreewise, the sequence
//   ... -> H_d(a1,a2] -> H_d(a1,inf] -> H_d(a2,inf] -> H_{d-1}(a1,a2] -> ...
// must admit nonnegative connecting ranks. Checked by the greedy
// alternating-sum criterion on the flattened sequence.
inline TripleReport triple_exactness_check(const GradedChainComplex& c,
                                           const Rational& a1,
                                           const Rational& a2) {
    if (!(a1 < a2)) throw std::invalid_argument("need a1 < a2");
    HomologyTable mid = homology(window_subquotient(c, a1, a2));
    HomologyTable low = homology(window_subquotient(c, a1, std::nullopt));
    HomologyTable high = homology(window_subquotient(c, a2, std::nullopt));

    long top = c.max_degree() + 1, bottom = c.min_degree() - 1;
    long carry = 0;
    for (long d = top; d >= bottom; --d) {
        const std::pair<long, const char*> terms[3] = {
            {mid.rank(d), "(a1,a2]"},
            {low.rank(d), "(a1,inf]"},
            {high.rank(d), "(a2,inf]"}};
        for (const auto& [t, label] : terms) {
            long out = t - carry;
            if (out < 0) return TripleReport{false, d, label};
            carry = out;
        }
    }
    if (carry != 0) return TripleReport{false, bottom, "tail"};
    return TripleReport{};
}

}  // namespace gfh

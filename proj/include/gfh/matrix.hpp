#pragma once

// Dense exact matrices and the two reduction algorithms everything else is
// built on: Gaussian elimination over F_k and Smith normal form over Z.
// Complexes at desk scale have at most a few thousand generators, so dense
// storage is fine.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "rational.hpp"

namespace gfh {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const = default;

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
        Matrix r(rows_, o.cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t l = 0; l < cols_; ++l) {
                const T& x = at(i, l);
                if (x == zero_) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + x * o.at(l, j);
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Restriction to the given row/column index subsets, in the given order.
    Matrix select(const std::vector<std::size_t>& row_idx,
                  const std::vector<std::size_t>& col_idx) const {
        Matrix r(row_idx.size(), col_idx.size(), zero_);
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                r.at(i, j) = at(row_idx[i], col_idx[j]);
        return r;
    }

    bool is_zero() const {
        for (const T& x : a_)
            if (!(x == zero_)) return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    T zero_;
    std::vector<T> a_;
};

using FpMatrix = Matrix<Fp>;
using IntMatrix = Matrix<Int>;

inline FpMatrix fp_identity(std::size_t n, long k) {
    FpMatrix m(n, n, Fp::zero(k));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp::one(k);
    return m;
}

inline IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, n, Int(0));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

// Reduce an integer matrix mod k into F_k.
inline FpMatrix reduce_mod(const IntMatrix& m, long k) {
    FpMatrix r(m.rows(), m.cols(), Fp::zero(k));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int v = m.at(i, j) % k;
            r.at(i, j) = Fp(static_cast<long>(v), k);
        }
    return r;
}

struct RankKernel {
    long rank = 0;
    // Kernel basis vectors (each of length cols), in reduced echelon form
    // with respect to the free columns: deterministic for a given input.
    std::vector<std::vector<Fp>> kernel;
};

// Row reduction over F_k. Pivots are chosen left to right, first nonzero row.
inline RankKernel rank_kernel(const FpMatrix& m, long k) {
    require_prime(k);
    const std::size_t rows = m.rows(), cols = m.cols();
    FpMatrix r = m;
    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = pr;
        while (sel < rows && r.at(sel, c).is_zero()) ++sel;
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(r.at(sel, j), r.at(pr, j));
        Fp inv = r.at(pr, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            r.at(pr, j) = r.at(pr, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || r.at(i, c).is_zero()) continue;
            Fp f = r.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                r.at(i, j) = r.at(i, j) - f * r.at(pr, j);
        }
        pivot_col_of_row.push_back(static_cast<long>(c));
        is_pivot_col[c] = true;
        ++pr;
    }

    RankKernel out;
    out.rank = static_cast<long>(pr);
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot_col[c]) continue;
        std::vector<Fp> v(cols, Fp::zero(k));
        v[c] = Fp::one(k);
        for (std::size_t i = 0; i < pr; ++i)
            v[pivot_col_of_row[i]] = -r.at(i, c);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

inline long fp_rank(const FpMatrix& m, long k) {
    return rank_kernel(m, k).rank;
}

struct SmithForm {
    IntMatrix d;  // diagonal of invariant factors, d_i | d_{i+1}
    IntMatrix u;  // unimodular, u * a * v == d
    IntMatrix v;
    long rank = 0;  // number of nonzero invariant factors

    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (d.at(i, i) != 0) f.push_back(d.at(i, i));
        return f;
    }
};

namespace detail {

inline void row_op(IntMatrix& m, std::size_t dst, std::size_t src,
                   const Int& f) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(dst, j) += f * m.at(src, j);
}

inline void col_op(IntMatrix& m, std::size_t dst, std::size_t src,
                   const Int& f) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.at(i, dst) += f * m.at(i, src);
}

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace detail

// Smith normal form with transform tracking: returns (d, u, v) with
// u * a * v == d, det(u), det(v) in {+-1}, and d_i | d_{i+1}. The
// reconstruction identity is re-checked before returning.
inline SmithForm smith_normal_form(const IntMatrix& a) {
    using namespace detail;
    const std::size_t rows = a.rows(), cols = a.cols();
    SmithForm s;
    s.d = a;
    s.u = int_identity(rows);
    s.v = int_identity(cols);
    IntMatrix& d = s.d;

    std::size_t t = 0;
    const std::size_t n = std::min(rows, cols);
    while (t < n) {
        // locate a nonzero pivot with minimal absolute value
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (d.at(i, j) == 0) continue;
                Int av = abs(d.at(i, j));
                if (!found || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) {
            swap_rows(d, pi, t);
            swap_rows(s.u, pi, t);
        }
        if (pj != t) {
            swap_cols(d, pj, t);
            swap_cols(s.v, pj, t);
        }
        // clear row and column t
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                row_op(d, i, t, -q);
                row_op(s.u, i, t, -q);
                if (d.at(i, t) != 0) {
                    // remainder smaller than pivot: swap up and restart
                    swap_rows(d, i, t);
                    swap_rows(s.u, i, t);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                col_op(d, j, t, -q);
                col_op(s.v, j, t, -q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, j, t);
                    swap_cols(s.v, j, t);
                    dirty = true;
                }
            }
        }
        // divisibility fix-up: fold any entry not divisible by the pivot
        // into column t and redo this pivot
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols && !redo; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    row_op(d, t, i, 1);
                    row_op(s.u, t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        if (d.at(t, t) < 0) {
            d.at(t, t) = -d.at(t, t);
            for (std::size_t j = 0; j < cols; ++j)
                s.v.at(j, t) = -s.v.at(j, t);
        }
        ++t;
    }
    s.rank = static_cast<long>(t);

    if (!(s.u * a * s.v == d))
        throw std::logic_error("smith_normal_form: U*A*V != D");
    return s;
}

}  // namespace gfh

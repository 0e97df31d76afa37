#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "toric_ci/rational.hpp"

namespace toric_ci {

// Dense matrix over arbitrary-precision integers, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows = init.size();
        cols = rows ? init.begin()->size() : 0;
        data.reserve(rows * cols);
        for (const auto& row : init) {
            assert(row.size() == cols);
            for (long v : row) data.emplace_back(v);
        }
    }

    Int& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    IntVec row(std::size_t i) const {
        return IntVec(data.begin() + i * cols, data.begin() + (i + 1) * cols);
    }
    IntVec col(std::size_t j) const {
        IntVec v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[a] += c * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t j = 0; j < cols; ++j) (*this)(a, j) += c * (*this)(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t i = 0; i < rows; ++i) (*this)(i, a) += c * (*this)(i, b);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = -(*this)(i, j);
    }
    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows; ++i) (*this)(i, j) = -(*this)(i, j);
    }
};

inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols == b.rows);
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline IntVec mul(const IntMatrix& a, const IntVec& v) {
    assert(a.cols == v.size());
    IntVec r(a.rows, Int(0));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r[i] += a(i, j) * v[j];
    return r;
}

inline IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

// Fraction-free (Bareiss) elimination. Pivot rule: sweep columns left to
// right, take the first row with a nonzero entry in the current column.
// Entries stay determinants of submatrices of the input, so all divisions
// are exact. Returns the rank; if det_out is given the matrix must be
// square and receives the determinant (sign tracked through row swaps).
inline std::size_t bareiss_rank(IntMatrix m, Int* det_out = nullptr) {
    const std::size_t nr = m.rows, nc = m.cols;
    std::size_t k = 0;
    Int prev(1);
    int det_sign = 1;
    for (std::size_t col = 0; col < nc && k < nr; ++col) {
        std::size_t piv = nr;
        for (std::size_t i = k; i < nr; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv == nr) continue;
        if (piv != k) { m.swap_rows(piv, k); det_sign = -det_sign; }
        for (std::size_t i = k + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                Int t = m(k, col) * m(i, j) - m(i, col) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(k, col);
        ++k;
    }
    if (det_out) {
        assert(nr == nc);
        if (k < nr) *det_out = 0;
        else *det_out = det_sign * prev;  // last pivot of full elimination is det
    }
    return k;
}

inline Int det_bareiss(const IntMatrix& m) {
    assert(m.rows == m.cols);
    if (m.rows == 0) return Int(1);
    Int d;
    bareiss_rank(m, &d);
    return d;
}

// Exact inverse of a matrix with determinant ±1, via rational Gauss-Jordan;
// asserts integrality of the result.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    assert(m.rows == m.cols);
    const std::size_t n = m.rows;
    std::vector<RatVec> a(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        assert(piv < n && "matrix not invertible");
        std::swap(a[piv], a[col]);
        Rat p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = a[i][n + j];
            v.canonicalize();
            assert(v.get_den() == 1 && "inverse not integral");
            inv(i, j) = v.get_num();
        }
    return inv;
}

}  // namespace toric_ci

#pragma once

#include <cstdlib>

#include "toric_ci/int_matrix.hpp"

namespace toric_ci {

struct SmithForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix s;  // diagonal, d1 | d2 | ..., di >= 0, zeros trailing
    IntMatrix v;  // cols x cols, unimodular
};

namespace detail {

// Smallest-absolute-value nonzero entry of the trailing submatrix starting
// at (k,k); ties broken by lowest (row, col). Returns false if all zero.
inline bool find_pivot(const IntMatrix& a, std::size_t k, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < a.rows; ++i)
        for (std::size_t j = k; j < a.cols; ++j) {
            const Int& x = a(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace detail

// U * A * V = S with U, V unimodular and S in Smith normal form.
// Deterministic: pivot selection as in detail::find_pivot, euclidean
// reduction sweeps rows before columns.
inline SmithForm smith_normal_form(const IntMatrix& a0) {
    SmithForm f;
    f.s = a0;
    f.u = IntMatrix::identity(a0.rows);
    f.v = IntMatrix::identity(a0.cols);
    IntMatrix& s = f.s;

    const std::size_t steps = std::min(a0.rows, a0.cols);
    for (std::size_t k = 0; k < steps; ++k) {
        bool have_pivot = true;
        for (;;) {
            std::size_t pr, pc;
            if (!detail::find_pivot(s, k, pr, pc)) { have_pivot = false; break; }
            if (pr != k) { s.swap_rows(k, pr); f.u.swap_rows(k, pr); }
            if (pc != k) { s.swap_cols(k, pc); f.v.swap_cols(k, pc); }

            // Euclidean reduction of column k and row k against the pivot.
            bool reduced = true;
            for (std::size_t i = k + 1; i < s.rows; ++i) {
                if (s(i, k) == 0) continue;
                Int q = s(i, k) / s(k, k);  // truncated division
                if (q != 0) { s.add_row(i, k, -q); f.u.add_row(i, k, -q); }
                if (s(i, k) != 0) reduced = false;
            }
            for (std::size_t j = k + 1; j < s.cols; ++j) {
                if (s(k, j) == 0) continue;
                Int q = s(k, j) / s(k, k);
                if (q != 0) { s.add_col(j, k, -q); f.v.add_col(j, k, -q); }
                if (s(k, j) != 0) reduced = false;
            }
            if (!reduced) continue;  // smaller remainders became new candidates

            // Row and column are clear; enforce divisibility of the rest.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < s.rows && divides_all; ++i)
                for (std::size_t j = k + 1; j < s.cols && divides_all; ++j)
                    if (s(i, j) % s(k, k) != 0) {
                        s.add_row(k, i, Int(1));
                        f.u.add_row(k, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (!have_pivot) break;
        if (s(k, k) < 0) { s.negate_row(k); f.u.negate_row(k); }
    }
    return f;
}

inline std::size_t smith_rank(const SmithForm& f) {
    std::size_t r = 0;
    const std::size_t n = std::min(f.s.rows, f.s.cols);
    while (r < n && f.s(r, r) != 0) ++r;
    return r;
}

// Basis of the integer kernel {x : A x = 0}, as matrix columns.
inline IntMatrix integer_kernel(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    std::size_t r = smith_rank(f);
    IntMatrix k(a.cols, a.cols - r);
    for (std::size_t j = r; j < a.cols; ++j)
        for (std::size_t i = 0; i < a.cols; ++i) k(i, j - r) = f.v(i, j);
    return k;
}

}  // namespace toric_ci

#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive and separate from the library code paths they certify.

#include <algorithm>
#include <random>
#include <vector>

#include "toric_ci/int_matrix.hpp"
#include "toric_ci/ring.hpp"

namespace oracle {

using toric_ci::Int;
using toric_ci::IntMatrix;
using toric_ci::IntVec;
using toric_ci::Rat;
using toric_ci::RatVec;

// Determinant by cofactor expansion along the first row.
inline Int det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.rows;
    if (n == 0) return Int(1);
    if (n == 1) return m(0, 0);
    Int acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i - 1, cc++) = m(i, c);
            }
        }
        Int term = m(0, j) * det_cofactor(sub);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

// gcd of all k x k minors (0 when every minor vanishes).
inline Int minor_gcd(const IntMatrix& m, std::size_t k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int g(0);
    std::vector<std::size_t> rows(m.rows), cols(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) rows[i] = i;
    for (std::size_t j = 0; j < m.cols; ++j) cols[j] = j;

    std::vector<bool> rmask(m.rows, false), cmask(m.cols, false);
    std::fill(rmask.end() - k, rmask.end(), true);
    do {
        std::vector<std::size_t> rs;
        for (std::size_t i = 0; i < m.rows; ++i)
            if (rmask[i]) rs.push_back(i);
        std::fill(cmask.begin(), cmask.end(), false);
        std::fill(cmask.end() - k, cmask.end(), true);
        do {
            std::vector<std::size_t> cs;
            for (std::size_t j = 0; j < m.cols; ++j)
                if (cmask[j]) cs.push_back(j);
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
            Int d = det_cofactor(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        } while (std::next_permutation(cmask.begin(), cmask.end()));
    } while (std::next_permutation(rmask.begin(), rmask.end()));
    return g;
}

// Smith invariant factors via the minor-gcd characterization:
// d_k = gcd(k-minors) / gcd((k-1)-minors).
inline IntVec smith_diagonal_by_minors(const IntMatrix& m) {
    const std::size_t n = std::min(m.rows, m.cols);
    IntVec d(n, Int(0));
    Int prev(1);
    for (std::size_t k = 1; k <= n; ++k) {
        Int g = minor_gcd(m, k);
        if (g == 0) break;  // this and all later invariants are zero
        d[k - 1] = g / prev;
        prev = g;
    }
    return d;
}

// Textbook rational row reduction; counts pivots. Kept independent of the
// library's fraction-free elimination.
inline std::size_t rank_gauss(std::vector<RatVec> rows) {
    const std::size_t nc = rows.empty() ? 0 : rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc; ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        Rat p = rows[rank][col];
        for (auto& x : rows[rank]) x /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = 0; j < nc; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t maxdim, int maxabs) {
    std::uniform_int_distribution<std::size_t> dim(1, maxdim);
    std::uniform_int_distribution<int> val(-maxabs, maxabs);
    IntMatrix m(dim(rng), dim(rng));
    for (auto& x : m.data) x = val(rng);
    return m;
}

// Degree-fiber enumeration by scanning the whole exponent box [0, box]^arity.
// The caller must pick box large enough to contain the fiber.
inline std::vector<toric_ci::ExpVec> boxed_monomials(const toric_ci::RingSpec& ring,
                                                     const toric_ci::GroupElement& gamma,
                                                     unsigned box) {
    std::vector<toric_ci::ExpVec> out;
    toric_ci::ExpVec e(ring.arity(), 0u);
    for (;;) {
        if (toric_ci::monomial_degree(ring, e) == gamma) out.push_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == box) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle

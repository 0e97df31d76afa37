#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "toric_ci/int_matrix.hpp"

namespace toric_ci {

// Sparse row over Z: (column, coefficient) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, Int>>;

namespace detail {

inline void strip_content(SparseRow& r) {
    if (r.empty()) return;
    Int g(0);
    for (const auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (r[0].second < 0)
        for (auto& [c, v] : r) v = -v;
}

// r <- lead(p) * r - lead(r) * p, cancelling the shared leading column.
inline SparseRow eliminate_lead(const SparseRow& r, const SparseRow& p) {
    const Int& lr = r[0].second;
    const Int& lp = p[0].second;
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 1, j = 1;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, lp * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -lr * p[j].second);
            ++j;
        } else {
            Int v = lp * r[i].second - lr * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    strip_content(out);
    return out;
}

// Row echelon over Q with fraction-free combinations and content removal.
// Columns are swept in increasing order via the leading-entry discipline;
// the pivot for a column is the first row (input order) that still leads
// with it.
inline std::size_t rank_sparse_echelon(std::vector<SparseRow>& rows) {
    std::map<std::uint32_t, SparseRow> pivots;
    std::size_t rank = 0;
    for (auto& row : rows) {
        SparseRow r = std::move(row);
        strip_content(r);
        while (!r.empty()) {
            auto it = pivots.find(r[0].first);
            if (it == pivots.end()) break;
            r = eliminate_lead(r, it->second);
        }
        if (!r.empty()) {
            std::uint32_t lead = r[0].first;
            pivots.emplace(lead, std::move(r));
            ++rank;
        }
    }
    return rank;
}

}  // namespace detail

// Rank over Q of a sparse integer row set. The rows are first split into
// connected components of the row/column incidence graph (rank is additive
// across components); small components go through dense fraction-free
// elimination, large ones through the sparse echelon.
inline std::size_t rank_of_rows(const std::vector<SparseRow>& rows) {
    std::vector<std::uint32_t> cols;
    for (const auto& r : rows)
        for (const auto& [c, v] : r) cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (cols.empty()) return 0;

    // union-find over the distinct columns
    std::vector<std::uint32_t> parent(cols.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto local = [&](std::uint32_t c) {
        return std::uint32_t(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
    };
    for (const auto& r : rows) {
        if (r.empty()) continue;
        std::uint32_t a = find(local(r[0].first));
        for (std::size_t i = 1; i < r.size(); ++i) {
            std::uint32_t b = find(local(r[i].first));
            if (a != b) parent[b] = a, a = find(a);
        }
    }

    std::map<std::uint32_t, std::vector<const SparseRow*>> comp_rows;
    for (const auto& r : rows) {
        if (r.empty()) continue;
        comp_rows[find(local(r[0].first))].push_back(&r);
    }

    std::size_t rank = 0;
    for (auto& [root, rptrs] : comp_rows) {
        std::vector<std::uint32_t> ccols;
        for (const auto* r : rptrs)
            for (const auto& [c, v] : *r) ccols.push_back(c);
        std::sort(ccols.begin(), ccols.end());
        ccols.erase(std::unique(ccols.begin(), ccols.end()), ccols.end());

        if (ccols.size() <= 48 && rptrs.size() <= 96) {
            IntMatrix m(rptrs.size(), ccols.size());
            for (std::size_t i = 0; i < rptrs.size(); ++i)
                for (const auto& [c, v] : *rptrs[i]) {
                    std::size_t j = std::lower_bound(ccols.begin(), ccols.end(), c) - ccols.begin();
                    m(i, j) = v;
                }
            rank += bareiss_rank(m);
        } else {
            std::vector<SparseRow> sub;
            sub.reserve(rptrs.size());
            for (const auto* r : rptrs) {
                SparseRow s = *r;
                for (auto& [c, v] : s)
                    c = std::uint32_t(std::lower_bound(ccols.begin(), ccols.end(), c) -
                                      ccols.begin());
                sub.push_back(std::move(s));
            }
            rank += detail::rank_sparse_echelon(sub);
        }
    }
    return rank;
}

// Convenience: rank of a dense rational matrix (clears denominators per row).
inline std::size_t rank_of_dense(const std::vector<RatVec>& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.size());
    for (const auto& r : m) {
        Int lcm(1);
        for (const auto& x : r) {
            Rat c(x);
            c.canonicalize();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        SparseRow s;
        for (std::size_t j = 0; j < r.size(); ++j) {
            Rat c = r[j] * Rat(lcm);
            c.canonicalize();
            if (c != 0) s.emplace_back(std::uint32_t(j), c.get_num());
        }
        rows.push_back(std::move(s));
    }
    return rank_of_rows(rows);
}

}  // namespace toric_ci

#pragma once

#include <map>

#include "toric_ci/cayley.hpp"
#include "toric_ci/linear.hpp"
#include "toric_ci/ring.hpp"

namespace toric_ci {

namespace detail {

// Rows of the degree-gamma piece of <gens>, one per (generator, multiplier
// monomial), expressed in the monomial basis of gamma. Coefficients are
// cleared to integers row by row.
inline std::vector<SparseRow> ideal_piece_rows(const std::vector<MultiPoly>& gens,
                                               const GroupElement& gamma,
                                               const std::map<ExpVec, std::uint32_t>& column) {
    std::vector<SparseRow> rows;
    if (column.empty()) return rows;
    const RingSpec& ring = *gens.front().ring;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        GroupElement dg = degree_of(g);
        Int lcm(1);
        for (const auto& [e, c] : g.terms)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& m : monomials_of_degree(ring, gamma - dg)) {
            SparseRow row;
            row.reserve(g.terms.size());
            for (const auto& [e, c] : g.terms) {
                ExpVec prod = e;
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += m[i];
                auto it = column.find(prod);
                if (it == column.end())
                    throw internal_error("product monomial escaped its graded piece");
                Rat v = c * Rat(lcm);
                v.canonicalize();
                row.emplace_back(it->second, v.get_num());
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::map<ExpVec, std::uint32_t> column_index(const std::vector<ExpVec>& basis) {
    std::map<ExpVec, std::uint32_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], std::uint32_t(i));
    return column;
}

}  // namespace detail

// Dimension over Q of the degree-gamma piece of the ideal generated by gens.
inline std::size_t graded_ideal_dim(const std::vector<MultiPoly>& gens,
                                    const GroupElement& gamma) {
    if (gens.empty()) return 0;
    auto basis = monomials_of_degree(*gens.front().ring, gamma);
    if (basis.empty()) return 0;
    auto rows = detail::ideal_piece_rows(gens, gamma, detail::column_index(basis));
    return rank_of_rows(rows);
}

inline std::vector<MultiPoly> jacobian_generators(const CayleySetup& cs) {
    std::vector<MultiPoly> gens;
    for (std::size_t k = 0; k < cs.ring_R->arity(); ++k)
        gens.push_back(partial_derivative(cs.F, k));
    return gens;
}

// dim of the degree-gamma piece of R/<all partial derivatives of F>.
inline std::size_t jacobian_ring_dim(const CayleySetup& cs, const GroupElement& gamma) {
    std::size_t ambient = monomials_of_degree(*cs.ring_R, gamma).size();
    if (ambient == 0) return 0;
    return ambient - graded_ideal_dim(jacobian_generators(cs), gamma);
}

// dim of the degree-gamma piece of R / (<z_k dF/dz_k> : z_1...z_{n+s}).
// Multiplication by the product of all variables embeds R_gamma into the
// piece at gamma + beta0; the colon ideal's piece is the intersection of the
// toral Jacobian piece with that embedded subspace, so its dimension drops
// out of two ranks: all columns versus the columns off the embedded image.
inline std::size_t colon_ring_dim(const CayleySetup& cs, const GroupElement& gamma) {
    const RingSpec& ring = *cs.ring_R;
    auto r_basis = monomials_of_degree(ring, gamma);
    if (r_basis.empty()) return 0;

    std::vector<MultiPoly> gens;
    for (std::size_t k = 0; k < ring.arity(); ++k) {
        ExpVec zk(ring.arity(), 0u);
        zk[k] = 1;
        gens.push_back(monomial_poly(cs.ring_R, zk) * partial_derivative(cs.F, k));
    }

    GroupElement shifted = gamma + cs.beta0;
    auto big_basis = monomials_of_degree(ring, shifted);
    auto column = detail::column_index(big_basis);
    auto rows = detail::ideal_piece_rows(gens, shifted, column);

    // columns hit by m * (product of all variables) for m in the gamma piece
    std::vector<bool> embedded(big_basis.size(), false);
    for (const auto& m : r_basis) {
        ExpVec shift = m;
        for (auto& x : shift) x += 1;
        auto it = column.find(shift);
        if (it == column.end()) throw internal_error("shifted monomial escaped its graded piece");
        embedded[it->second] = true;
    }

    std::size_t full_rank = rank_of_rows(rows);
    std::vector<SparseRow> outside;
    outside.reserve(rows.size());
    for (const auto& r : rows) {
        SparseRow s;
        for (const auto& [c, v] : r)
            if (!embedded[c]) s.emplace_back(c, v);
        outside.push_back(std::move(s));
    }
    std::size_t outside_rank = rank_of_rows(outside);
    std::size_t colon_dim = full_rank - outside_rank;
    if (colon_dim > r_basis.size()) throw internal_error("colon ideal piece exceeds its ambient");
    return r_basis.size() - colon_dim;
}

}  // namespace toric_ci

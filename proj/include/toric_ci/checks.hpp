#pragma once

#include <set>

#include "toric_ci/fan.hpp"
#include "toric_ci/groebner.hpp"
#include "toric_ci/ring.hpp"

namespace toric_ci {

namespace detail {

// Determinant of a square matrix of polynomials, by first-row expansion.
inline MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m,
                          const std::shared_ptr<const RingSpec>& ring) {
    const std::size_t k = m.size();
    if (k == 0) return constant_poly(ring, Rat(1));
    if (k == 1) return m[0][0];
    MultiPoly acc(ring);
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> sub(k - 1);
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) sub[i - 1].push_back(m[i][c]);
        MultiPoly term = m[0][j] * poly_det(sub, ring);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// All k x k minors of the Jacobian of the given polynomials with respect to
// the given variables; zero minors dropped, duplicates kept out.
inline std::vector<MultiPoly> jacobian_minors(const std::vector<MultiPoly>& fs,
                                              const std::vector<std::size_t>& vars) {
    const std::size_t k = fs.size();
    std::vector<MultiPoly> minors;
    if (k == 0 || vars.size() < k) return minors;
    auto ring = fs.front().ring;

    std::vector<std::vector<MultiPoly>> grad(k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t v : vars) grad[j].push_back(partial_derivative(fs[j], v));

    std::vector<std::map<ExpVec, Rat>> seen;
    std::vector<bool> mask(vars.size(), false);
    std::fill(mask.end() - k, mask.end(), true);
    std::vector<std::size_t> cols;
    do {
        cols.clear();
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (mask[i]) cols.push_back(i);
        std::vector<std::vector<MultiPoly>> sub(k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c : cols) sub[j].push_back(grad[j][c]);
        MultiPoly d = poly_det(sub, ring);
        if (d.is_zero()) continue;
        if (std::find(seen.begin(), seen.end(), d.terms) == seen.end()) {
            seen.push_back(d.terms);
            minors.push_back(std::move(d));
        }
    } while (std::next_permutation(mask.begin(), mask.end()));
    return minors;
}

inline MultiPoly squarefree_monomial(const std::shared_ptr<const RingSpec>& ring,
                                     const std::vector<std::size_t>& vars) {
    ExpVec e(ring->arity(), 0u);
    for (std::size_t v : vars) e[v] = 1;
    return monomial_poly(ring, e);
}

}  // namespace detail

enum class SmoothVerdict { QuasiSmooth, QuasiSmoothEmpty, NotQuasiSmooth };

inline const char* to_string(SmoothVerdict v) {
    switch (v) {
        case SmoothVerdict::QuasiSmooth: return "QuasiSmooth";
        case SmoothVerdict::QuasiSmoothEmpty: return "QuasiSmoothEmpty";
        default: return "NotQuasiSmooth";
    }
}

struct QuasiSmoothResult {
    SmoothVerdict verdict = SmoothVerdict::QuasiSmooth;
    std::string witness;  // irrelevant generator whose locus meets the singularities
};

// Is V(f_1..f_s) smooth of codimension s off the irrelevant locus? Tested
// via: the equations plus all s x s Jacobian minors must cut out a subset of
// the irrelevant locus, i.e. every irrelevant generator must lie in the
// radical. An intersection missing U entirely is reported separately.
inline QuasiSmoothResult quasi_smooth_check(const Fan& fan, const std::vector<MultiPoly>& fs) {
    auto ring = fs.front().ring;
    for (const auto& f : fs) degree_of(f);  // NotHomogeneous propagates

    std::vector<std::size_t> all_vars(ring->arity());
    for (std::size_t i = 0; i < all_vars.size(); ++i) all_vars[i] = i;

    std::vector<MultiPoly> ideal = fs;
    for (auto& m : detail::jacobian_minors(fs, all_vars)) ideal.push_back(std::move(m));

    QuasiSmoothResult res;
    std::vector<MultiPoly> hats;
    for (const auto& e : irrelevant_generators(fan)) {
        ExpVec lift = e;
        lift.resize(ring->arity(), 0u);
        hats.push_back(monomial_poly(ring, lift));
    }
    for (const auto& hat : hats)
        if (!radical_membership(hat, ideal)) {
            res.verdict = SmoothVerdict::NotQuasiSmooth;
            res.witness = monomial_to_string(*ring, hat.terms.begin()->first);
            return res;
        }
    bool all_empty = true;
    for (const auto& hat : hats)
        if (!radical_membership(hat, fs)) {
            all_empty = false;
            break;
        }
    res.verdict = all_empty ? SmoothVerdict::QuasiSmoothEmpty : SmoothVerdict::QuasiSmooth;
    return res;
}

struct NondegenerateResult {
    bool nondegenerate = true;
    std::vector<int> witness_cone;    // ray indices of the failing stratum
    std::vector<int> witness_subset;  // 0-based indices into fs
};

// Every subset of the hypersurfaces must meet every torus-orbit stratum
// transversally: substitute the stratum's variables to zero, then the
// restricted equations plus their maximal minors may only vanish where some
// surviving coordinate does. Strata are scanned in (size, lex) order and
// subsets in bitmask order; the first failure is the witness.
inline NondegenerateResult nondegenerate_check(const Fan& fan, const std::vector<MultiPoly>& fs) {
    auto ring = fs.front().ring;
    const std::size_t s = fs.size();
    for (const auto& f : fs) degree_of(f);

    std::set<std::vector<int>> cone_set;
    for (const auto& cone0 : fan.max_cones) {
        std::vector<int> cone = cone0;
        std::sort(cone.begin(), cone.end());
        const std::size_t m = cone.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
            std::vector<int> f;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (std::size_t(1) << b)) f.push_back(cone[b]);
            cone_set.insert(std::move(f));
        }
    }
    std::vector<std::vector<int>> cones(cone_set.begin(), cone_set.end());
    std::sort(cones.begin(), cones.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    NondegenerateResult res;
    for (const auto& tau : cones) {
        std::vector<std::size_t> surviving;
        for (std::size_t i = 0; i < fan.num_rays(); ++i)
            if (std::find(tau.begin(), tau.end(), int(i)) == tau.end()) surviving.push_back(i);

        std::vector<MultiPoly> subst = fs;
        for (auto& g : subst)
            for (int i : tau) g = substitute_zero(g, std::size_t(i));

        for (std::size_t mask = 1; mask < (std::size_t(1) << s); ++mask) {
            std::vector<MultiPoly> sel;
            std::vector<int> subset;
            for (std::size_t j = 0; j < s; ++j)
                if (mask & (std::size_t(1) << j)) {
                    sel.push_back(subst[j]);
                    subset.push_back(int(j));
                }
            std::vector<MultiPoly> ideal = sel;
            for (auto& m : detail::jacobian_minors(sel, surviving)) ideal.push_back(std::move(m));
            MultiPoly torus = detail::squarefree_monomial(ring, surviving);
            if (!radical_membership(torus, ideal)) {
                res.nondegenerate = false;
                res.witness_cone = tau;
                res.witness_subset = std::move(subset);
                return res;
            }
        }
    }
    return res;
}

}  // namespace toric_ci

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric_ci/abelian.hpp"
#include "toric_ci/errors.hpp"
#include "toric_ci/fourier_motzkin.hpp"
#include "toric_ci/int_matrix.hpp"

namespace toric_ci {

// Complete simplicial fan: primitive ray generators plus maximal cones given
// as 0-based ray index sets.
struct Fan {
    std::size_t lattice_rank = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<int>> max_cones;

    std::size_t num_rays() const { return rays.size(); }
};

struct ValidationIssue {
    std::string code;  // RaysNotPrimitive | NotSimplicial | NotComplete | NotAFan
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    std::vector<ValidationIssue> issues;

    void fail(std::string code, std::string message) {
        valid = false;
        issues.push_back({std::move(code), std::move(message)});
    }
};

namespace detail {

inline std::string cone_to_string(const std::vector<int>& cone) {
    std::string s = "{";
    for (std::size_t i = 0; i < cone.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cone[i]);
    }
    return s + "}";
}

// Strict separation test: do the two simplicial cones meet exactly in the
// face spanned by their shared rays? Equivalent to the existence of a linear
// form vanishing on the shared rays, <= -1 on the others of sigma and >= 1
// on the others of tau.
inline bool cones_meet_in_common_face(const Fan& fan, const std::vector<int>& sigma,
                                      const std::vector<int>& tau) {
    std::vector<int> common;
    std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                          std::back_inserter(common));
    const std::size_t d = fan.lattice_rank;

    IntMatrix k;
    if (common.empty()) {
        k = IntMatrix::identity(d);
    } else {
        IntMatrix a(common.size(), d);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = 0; j < d; ++j) a(i, j) = fan.rays[common[i]][j];
        k = integer_kernel(a);
    }
    if (k.cols == 0) {
        // forms vanishing on the common rays are all zero: separation is
        // possible only when there is nothing left to separate
        std::vector<int> only;
        std::set_symmetric_difference(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                                      std::back_inserter(only));
        return only.empty();
    }

    IneqSystem sys;
    sys.nvars = k.cols;
    auto add_ray = [&](int ri, bool from_sigma) {
        LinIneq r;
        r.a.resize(k.cols);
        for (std::size_t j = 0; j < k.cols; ++j) {
            Int acc(0);
            for (std::size_t c = 0; c < d; ++c) acc += fan.rays[ri][c] * k(c, j);
            r.a[j] = from_sigma ? acc : -acc;
        }
        r.b = -1;
        sys.rows.push_back(std::move(r));
    };
    for (int ri : sigma)
        if (!std::binary_search(common.begin(), common.end(), ri)) add_ray(ri, true);
    for (int ri : tau)
        if (!std::binary_search(common.begin(), common.end(), ri)) add_ray(ri, false);
    if (sys.rows.empty()) return true;  // one cone is a face of the other
    return feasible(std::move(sys));
}

}  // namespace detail

inline ValidationReport validate_fan(const Fan& fan) {
    ValidationReport rep;
    const std::size_t d = fan.lattice_rank;

    if (d == 0 || fan.rays.empty() || fan.max_cones.empty()) {
        rep.fail("NotAFan", "empty fan data");
        return rep;
    }
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (fan.rays[i].size() != d) {
            rep.fail("NotAFan", "ray " + std::to_string(i) + " has wrong dimension");
            return rep;
        }

    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        Int g(0);
        for (const auto& x : fan.rays[i]) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 0)
            rep.fail("RaysNotPrimitive", "ray " + std::to_string(i) + " is zero");
        else if (g != 1)
            rep.fail("RaysNotPrimitive",
                     "ray " + std::to_string(i) + " has content " + g.get_str());
    }
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        for (std::size_t j = i + 1; j < fan.rays.size(); ++j)
            if (fan.rays[i] == fan.rays[j])
                rep.fail("NotAFan", "rays " + std::to_string(i) + " and " + std::to_string(j) +
                                        " coincide");

    std::vector<std::vector<int>> cones;
    std::set<std::vector<int>> cone_set;
    std::vector<bool> ray_used(fan.rays.size(), false);
    for (const auto& c0 : fan.max_cones) {
        std::vector<int> c = c0;
        std::sort(c.begin(), c.end());
        for (int ri : c) {
            if (ri < 0 || std::size_t(ri) >= fan.rays.size()) {
                rep.fail("NotAFan", "cone " + detail::cone_to_string(c0) +
                                        " references a missing ray");
                return rep;
            }
            ray_used[ri] = true;
        }
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            rep.fail("NotAFan", "cone " + detail::cone_to_string(c0) + " repeats a ray");
        if (!cone_set.insert(c).second)
            rep.fail("NotAFan", "duplicate maximal cone " + detail::cone_to_string(c));
        cones.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < ray_used.size(); ++i)
        if (!ray_used[i])
            rep.fail("NotAFan", "ray " + std::to_string(i) + " is not used by any maximal cone");
    if (!rep.valid) return rep;

    for (const auto& c : cones) {
        if (c.size() != d) {
            rep.fail("NotSimplicial", "cone " + detail::cone_to_string(c) + " has " +
                                          std::to_string(c.size()) + " rays, expected " +
                                          std::to_string(d));
            continue;
        }
        IntMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = fan.rays[c[i]][j];
        if (bareiss_rank(m) != d)
            rep.fail("NotSimplicial",
                     "cone " + detail::cone_to_string(c) + " has linearly dependent rays");
    }
    if (!rep.valid) return rep;

    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            if (!detail::cones_meet_in_common_face(fan, cones[i], cones[j]))
                rep.fail("NotAFan", "cones " + detail::cone_to_string(cones[i]) + " and " +
                                        detail::cone_to_string(cones[j]) +
                                        " do not meet in a common face");
    if (!rep.valid) return rep;

    // completeness: every facet shared by exactly two maximal cones, and the
    // facet-adjacency graph connected
    std::map<std::vector<int>, std::vector<std::size_t>> facets;
    for (std::size_t ci = 0; ci < cones.size(); ++ci)
        for (std::size_t drop = 0; drop < d; ++drop) {
            std::vector<int> f = cones[ci];
            f.erase(f.begin() + drop);
            facets[f].push_back(ci);
        }
    for (const auto& [f, owners] : facets)
        if (owners.size() != 2)
            rep.fail("NotComplete", "facet " + detail::cone_to_string(f) + " belongs to " +
                                        std::to_string(owners.size()) +
                                        " maximal cones, expected 2");
    if (rep.valid) {
        std::vector<std::vector<std::size_t>> adj(cones.size());
        for (const auto& [f, owners] : facets) {
            adj[owners[0]].push_back(owners[1]);
            adj[owners[1]].push_back(owners[0]);
        }
        std::vector<bool> seen(cones.size(), false);
        std::vector<std::size_t> stack = {0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            for (std::size_t nb : adj[c])
                if (!seen[nb]) {
                    seen[nb] = true;
                    stack.push_back(nb);
                }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            rep.fail("NotComplete", "maximal-cone adjacency graph is disconnected");
    }
    return rep;
}

// Divisor class group presentation: Z^{rays} modulo the rows-of-rays pairing
// image, together with the classes of the coordinate divisors.
struct ChowData {
    CokernelPresentation pres;
    std::vector<GroupElement> var_degrees;
};

inline ChowData chow_degree_map(const Fan& fan) {
    IntMatrix a(fan.num_rays(), fan.lattice_rank);
    for (std::size_t i = 0; i < fan.num_rays(); ++i)
        for (std::size_t j = 0; j < fan.lattice_rank; ++j) a(i, j) = fan.rays[i][j];
    ChowData out;
    out.pres = cokernel_presentation(a);
    for (std::size_t i = 0; i < fan.num_rays(); ++i) {
        IntVec unit(fan.num_rays(), Int(0));
        unit[i] = 1;
        out.var_degrees.push_back(out.pres.project(unit));
    }
    return out;
}

// Generators of the irrelevant ideal: for each maximal cone, the squarefree
// monomial over the rays outside it. Duplicates dropped, cone order kept.
inline std::vector<ExpVec> irrelevant_generators(const Fan& fan) {
    std::vector<ExpVec> gens;
    std::set<ExpVec> seen;
    for (const auto& cone : fan.max_cones) {
        ExpVec e(fan.num_rays(), 1);
        for (int ri : cone) e[ri] = 0;
        if (seen.insert(e).second) gens.push_back(std::move(e));
    }
    return gens;
}

// Per-cone linear forms of a Cartier divisor sum(a_i D_i): <m_sigma, e_i> =
// -a_i on the rays of sigma.
struct CartierData {
    IntVec divisor;                 // the a_i
    std::vector<IntVec> cone_forms; // one form per maximal cone, input order
};

struct CartierOutcome {
    std::optional<CartierData> data;
    int bad_cone = -1;  // index into max_cones when not Cartier
};

inline CartierOutcome cartier_data(const Fan& fan, const IntVec& divisor) {
    CartierOutcome out;
    CartierData cd;
    cd.divisor = divisor;
    const std::size_t d = fan.lattice_rank;
    for (std::size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
        const auto& cone = fan.max_cones[ci];
        IntMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = fan.rays[cone[i]][j];
        Int det = det_bareiss(m);
        IntVec form(d);
        for (std::size_t k = 0; k < d; ++k) {
            IntMatrix mk = m;
            for (std::size_t i = 0; i < d; ++i) mk(i, k) = -divisor[cone[i]];
            Int num = det_bareiss(mk);
            if (num % det != 0) {
                out.bad_cone = int(ci);
                return out;
            }
            form[k] = num / det;
        }
        cd.cone_forms.push_back(std::move(form));
    }
    out.data = std::move(cd);
    return out;
}

// Strict convexity of the support function: <m_sigma, e_i> > -a_i for every
// ray outside sigma.
inline bool is_ample(const Fan& fan, const CartierData& cd) {
    for (std::size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
        const auto& cone = fan.max_cones[ci];
        for (std::size_t ri = 0; ri < fan.num_rays(); ++ri) {
            if (std::find(cone.begin(), cone.end(), int(ri)) != cone.end()) continue;
            Int val(0);
            for (std::size_t j = 0; j < fan.lattice_rank; ++j)
                val += cd.cone_forms[ci][j] * fan.rays[ri][j];
            if (!(val > -cd.divisor[ri])) return false;
        }
    }
    return true;
}

// Projectivization fan of a sum of line bundles L_j = O(sum_i a^j_i D_i)
// over the base fan. Lattice N + Z^{s-1}; base coordinates first. Ray order:
// the n modified base rays, then the s fiber rays n_1 = -(n_2+...+n_s),
// n_2, ..., n_s. Maximal cones: sigma lifted, plus all fiber rays but one.
inline Fan cayley_fan(const Fan& base, const std::vector<IntVec>& divisors) {
    const std::size_t s = divisors.size();
    const std::size_t d = base.lattice_rank;
    const std::size_t n = base.num_rays();
    if (s < 2) throw internal_error("cayley_fan needs at least two bundles");

    Fan pe;
    pe.lattice_rank = d + s - 1;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec r(d + s - 1, Int(0));
        for (std::size_t j = 0; j < d; ++j) r[j] = base.rays[i][j];
        // support values h_j(e_i) = -a^j_i; fiber coordinate j-1 carries
        // h_1(e_i) - h_j(e_i)
        for (std::size_t j = 2; j <= s; ++j) r[d + j - 2] = divisors[j - 1][i] - divisors[0][i];
        pe.rays.push_back(std::move(r));
    }
    {
        IntVec n1(d + s - 1, Int(0));
        for (std::size_t j = 0; j < s - 1; ++j) n1[d + j] = -1;
        pe.rays.push_back(std::move(n1));
        for (std::size_t j = 2; j <= s; ++j) {
            IntVec nj(d + s - 1, Int(0));
            nj[d + j - 2] = 1;
            pe.rays.push_back(std::move(nj));
        }
    }
    for (const auto& cone : base.max_cones)
        for (std::size_t omit = 0; omit < s; ++omit) {
            std::vector<int> c = cone;
            for (std::size_t j = 0; j < s; ++j)
                if (j != omit) c.push_back(int(n + j));
            pe.max_cones.push_back(std::move(c));
        }
    return pe;
}

// Even Betti numbers of the toric variety from the face counts:
// b_{2k} = sum_{i=k..d} (-1)^{i-k} C(i,k) d_{d-i}, odd Betti numbers vanish.
inline IntVec toric_betti(const Fan& fan) {
    const std::size_t d = fan.lattice_rank;
    std::set<std::vector<int>> faces;
    for (const auto& cone0 : fan.max_cones) {
        std::vector<int> cone = cone0;
        std::sort(cone.begin(), cone.end());
        const std::size_t m = cone.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
            std::vector<int> f;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (std::size_t(1) << b)) f.push_back(cone[b]);
            faces.insert(std::move(f));
        }
    }
    std::vector<Int> dim_count(d + 1, Int(0));
    for (const auto& f : faces) dim_count[f.size()] += 1;

    auto binom = [](std::size_t n, std::size_t k) {
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), n, k);
        return r;
    };
    IntVec betti(2 * d + 1, Int(0));
    for (std::size_t k = 0; k <= d; ++k) {
        Int b(0);
        for (std::size_t i = k; i <= d; ++i) {
            Int term = binom(i, k) * dim_count[d - i];
            if ((i - k) % 2 == 0) b += term;
            else b -= term;
        }
        betti[2 * k] = b;
    }
    return betti;
}

}  // namespace toric_ci

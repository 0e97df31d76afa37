#pragma once

#include <optional>

#include "toric_ci/fan.hpp"
#include "toric_ci/ring.hpp"

namespace toric_ci {

inline GroupElement append_level(const GroupElement& a, const Int& k) {
    GroupElement e = a;
    e.free.push_back(k);
    return e;
}

// Complete data for passing from s hypersurfaces on the base variety to one
// hypersurface F = sum y_j f_j on the projectivized bundle: the extended
// ring, F and its degree beta, the degree beta0 of the product of all
// variables, and a splitting of the extended grading group as (base Chow
// group) + Z that inverts the levelwise embedding.
struct CayleySetup {
    Fan base;
    std::size_t d = 0, n = 0, s = 0;
    ChowData base_chow;
    std::shared_ptr<const RingSpec> ring_S;  // x1..xn graded by the base Chow group
    std::vector<MultiPoly> fs;               // the inputs, in ring_S
    std::vector<GroupElement> alphas;        // their classes
    std::vector<IntVec> divisors;            // representative divisor of each class
    std::vector<CartierData> cartier;        // per-cone forms of those divisors

    std::optional<Fan> pe_fan;               // the bundle fan (s >= 2 only)
    std::optional<ChowData> pe_chow;
    std::shared_ptr<const RingSpec> ring_R;  // x1..xn, y1..ys
    std::vector<MultiPoly> fs_R;
    MultiPoly F;
    GroupElement beta, beta0;

    // inverse pair of isomorphisms between the extended grading group and
    // (base Chow group) + Z
    std::pair<GroupElement, Int> split(const GroupElement& gamma) const {
        if (!pe_chow) {
            // the extended grading is literally (base Chow group) + Z here
            GroupElement a = gamma;
            Int k = a.free.back();
            a.free.pop_back();
            return {a, k};
        }
        IntVec w = pe_chow->pres.section(gamma);
        IntVec wx(w.begin(), w.begin() + n);
        GroupElement a = base_chow.pres.project(wx);
        Int k(0);
        for (std::size_t j = 0; j < s; ++j) {
            a = a - w[n + j] * alphas[j];
            k += w[n + j];
        }
        return {a, k};
    }

    GroupElement reassemble(const GroupElement& a, const Int& k) const {
        if (!pe_chow) return append_level(a, k);
        IntVec w = base_chow.pres.section(a);
        w.resize(n + s, Int(0));
        return pe_chow->pres.project(w) + k * beta;
    }
};

inline std::shared_ptr<const RingSpec> cox_ring_spec(const Fan& fan, const ChowData& cd,
                                                     const std::string& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < fan.num_rays(); ++i)
        names.push_back(prefix + std::to_string(i + 1));
    return make_ring_spec(cd.pres.group, std::move(names), cd.var_degrees);
}

inline CayleySetup build_cayley(const Fan& fan, const std::vector<MultiPoly>& fs) {
    if (fs.empty()) throw toric_error("EmptySystem", "no hypersurfaces given");
    {
        ValidationReport rep = validate_fan(fan);
        if (!rep.valid)
            throw invalid_input_error("invalid fan: " + rep.issues.front().code + ": " +
                                      rep.issues.front().message);
    }

    CayleySetup cs;
    cs.base = fan;
    cs.d = fan.lattice_rank;
    cs.n = fan.num_rays();
    cs.s = fs.size();
    cs.base_chow = chow_degree_map(fan);
    cs.ring_S = cox_ring_spec(fan, cs.base_chow, "x");
    cs.fs = fs;

    for (std::size_t j = 0; j < cs.s; ++j) {
        const MultiPoly& f = fs[j];
        if (f.is_zero()) throw invalid_input_error("hypersurface " + std::to_string(j + 1) +
                                                   " is the zero polynomial");
        if (f.ring->arity() != cs.n)
            throw invalid_input_error("hypersurface " + std::to_string(j + 1) +
                                      " lives in a ring with the wrong variable count");
        cs.alphas.push_back(degree_of(f));  // throws when inhomogeneous
        const ExpVec& rep = f.terms.begin()->first;
        IntVec a(cs.n);
        for (std::size_t i = 0; i < cs.n; ++i) a[i] = Int(rep[i]);
        CartierOutcome co = cartier_data(fan, a);
        if (!co.data)
            throw not_cartier_error("the class of hypersurface " + std::to_string(j + 1) +
                                    " is not Cartier (fails on maximal cone index " +
                                    std::to_string(co.bad_cone) + ")");
        cs.divisors.push_back(std::move(a));
        cs.cartier.push_back(std::move(*co.data));
    }

    std::vector<std::string> names = cs.ring_S->names;
    for (std::size_t j = 0; j < cs.s; ++j) names.push_back("y" + std::to_string(j + 1));

    if (cs.s >= 2) {
        cs.pe_fan = cayley_fan(fan, cs.divisors);
        {
            ValidationReport rep = validate_fan(*cs.pe_fan);
            if (!rep.valid)
                throw internal_error("bundle fan failed validation: " + rep.issues.front().code);
        }
        cs.pe_chow = chow_degree_map(*cs.pe_fan);
        cs.ring_R =
            make_ring_spec(cs.pe_chow->pres.group, std::move(names), cs.pe_chow->var_degrees);
    } else {
        AbelianGroup ext{cs.base_chow.pres.group.free_rank + 1, cs.base_chow.pres.group.torsion};
        std::vector<GroupElement> degs;
        for (std::size_t i = 0; i < cs.n; ++i)
            degs.push_back(append_level(cs.base_chow.var_degrees[i], Int(0)));
        degs.push_back(append_level(-cs.alphas[0], Int(1)));
        cs.ring_R = make_ring_spec(ext, std::move(names), std::move(degs));
    }

    for (std::size_t j = 0; j < cs.s; ++j) {
        MultiPoly lifted(cs.ring_R);
        for (const auto& [e, c] : fs[j].terms) {
            ExpVec m = e;
            m.resize(cs.n + cs.s, 0u);
            lifted.terms.emplace(std::move(m), c);
        }
        cs.fs_R.push_back(std::move(lifted));
        ExpVec yj(cs.n + cs.s, 0u);
        yj[cs.n + j] = 1;
        cs.F = cs.F.ring ? cs.F + monomial_poly(cs.ring_R, yj) * cs.fs_R.back()
                         : monomial_poly(cs.ring_R, yj) * cs.fs_R.back();
    }
    cs.beta = degree_of(cs.F);  // NotHomogeneous here means an internal slip
    cs.beta0 = zero_element(cs.ring_R->group);
    for (const auto& dg : cs.ring_R->degrees) cs.beta0 = cs.beta0 + dg;

    // consistency of the splitting: it must kill the relation lattice of the
    // extended grading and invert the reassembly on all generators
    if (cs.pe_chow) {
        const Fan& pe = *cs.pe_fan;
        for (std::size_t col = 0; col < pe.lattice_rank; ++col) {
            IntVec rel(cs.n + cs.s);
            for (std::size_t i = 0; i < cs.n + cs.s; ++i) rel[i] = pe.rays[i][col];
            IntVec relx(rel.begin(), rel.begin() + cs.n);
            GroupElement a = cs.base_chow.pres.project(relx);
            Int k(0);
            for (std::size_t j = 0; j < cs.s; ++j) {
                a = a - rel[cs.n + j] * cs.alphas[j];
                k += rel[cs.n + j];
            }
            if (!a.is_zero() || k != 0)
                throw internal_error("degree splitting does not kill the relation lattice");
        }
    }
    for (std::size_t i = 0; i < cs.n + cs.s; ++i) {
        auto [a, k] = cs.split(cs.ring_R->degrees[i]);
        bool ok;
        if (i < cs.n)
            ok = (a == cs.base_chow.var_degrees[i]) && k == 0;
        else
            ok = (a == -cs.alphas[i - cs.n]) && k == 1;
        if (!ok || !(cs.reassemble(a, k) == cs.ring_R->degrees[i]))
            throw internal_error("degree splitting is not inverse to reassembly on variable " +
                                 cs.ring_R->names[i]);
    }
    {
        auto [a, k] = cs.split(cs.beta);
        if (!a.is_zero() || k != 1)
            throw internal_error("the class of F does not split as (0, 1)");
        for (std::size_t j = 0; j < cs.s; ++j) {
            GroupElement dj = degree_of(cs.fs_R[j]) + cs.ring_R->degrees[cs.n + j];
            if (!(dj == cs.beta))
                throw internal_error("deg(y_j f_j) differs from deg F for j = " +
                                     std::to_string(j + 1));
        }
    }
    return cs;
}

// The degree at which the variable cohomology in column p lives.
inline GroupElement hodge_degree(const CayleySetup& cs, long p) {
    Int c = Int(long(cs.d) + long(cs.s) - p);
    return c * cs.beta - cs.beta0;
}

// Bigraded reference ring over (base Chow group) + Z, bypassing the bundle
// fan; the fan route must give graded pieces of the same dimensions.
inline std::shared_ptr<const RingSpec> formal_ring(const CayleySetup& cs) {
    AbelianGroup ext{cs.base_chow.pres.group.free_rank + 1, cs.base_chow.pres.group.torsion};
    std::vector<GroupElement> degs;
    for (std::size_t i = 0; i < cs.n; ++i)
        degs.push_back(append_level(cs.base_chow.var_degrees[i], Int(0)));
    for (std::size_t j = 0; j < cs.s; ++j) degs.push_back(append_level(-cs.alphas[j], Int(1)));
    return make_ring_spec(ext, cs.ring_R->names, std::move(degs));
}

}  // namespace toric_ci

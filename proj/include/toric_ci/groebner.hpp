#pragma once

#include <numeric>
#include <set>
#include <tuple>

#include "toric_ci/ring.hpp"

namespace toric_ci {

// Total monomial order: graded reverse lexicographic or lexicographic, over
// an optional variable permutation (identity when empty).
struct MonomialOrder {
    enum Kind { grevlex, lex };
    Kind kind = grevlex;
    std::vector<std::size_t> perm;

    std::size_t at(std::size_t i) const { return perm.empty() ? i : perm[i]; }

    bool less(const ExpVec& a, const ExpVec& b) const {
        if (kind == grevlex) {
            unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
            unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
            if (da != db) return da < db;
            for (std::size_t i = a.size(); i-- > 0;) {
                unsigned xa = a[at(i)], xb = b[at(i)];
                if (xa != xb) return xa > xb;
            }
            return false;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            unsigned xa = a[at(i)], xb = b[at(i)];
            if (xa != xb) return xa < xb;
        }
        return false;
    }
};

namespace detail {

inline bool exp_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline const std::pair<const ExpVec, Rat>& leading_term(const MultiPoly& p,
                                                        const MonomialOrder& ord) {
    auto best = p.terms.begin();
    for (auto it = std::next(best); it != p.terms.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return *best;
}

// p - c * x^shift * g
inline void subtract_multiple(MultiPoly& p, const Rat& c, const ExpVec& shift,
                              const MultiPoly& g) {
    for (const auto& [e, v] : g.terms) {
        ExpVec m = e;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += shift[i];
        p.add_term(m, -c * v);
    }
}

}  // namespace detail

// Remainder of p on division by gens (full tail reduction). Deterministic:
// reducers are tried in list order.
inline MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& gens,
                             const MonomialOrder& ord) {
    std::vector<const std::pair<const ExpVec, Rat>*> leads;
    leads.reserve(gens.size());
    for (const auto& g : gens) leads.push_back(&detail::leading_term(g, ord));

    MultiPoly rem(p.ring);
    while (!p.terms.empty()) {
        auto [lt, lc] = detail::leading_term(p, ord);  // copies: p mutates below
        bool reduced = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!detail::exp_divides(leads[i]->first, lt)) continue;
            detail::subtract_multiple(p, lc / leads[i]->second, detail::exp_sub(lt, leads[i]->first),
                                      gens[i]);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt, lc);
            p.terms.erase(lt);
        }
    }
    return rem;
}

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<MultiPoly> elements;  // monic, interreduced, sorted by leading monomial

    bool is_unit_ideal() const {
        return elements.size() == 1 && elements[0].terms.size() == 1 &&
               elements[0].terms.begin()->first ==
                   ExpVec(elements[0].terms.begin()->first.size(), 0u);
    }
};

// Buchberger with the coprime-pair criterion. Pair selection: smallest lcm
// in the monomial order, ties by generator indices; output is the unique
// reduced basis for the order.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& ord) {
    std::vector<MultiPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);

    GroebnerBasis out;
    out.order = ord;
    if (basis.empty()) return out;

    auto lead = [&](std::size_t i) -> const ExpVec& {
        return detail::leading_term(basis[i], ord).first;
    };

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        auto chosen = pending.begin();
        ExpVec best_lcm = detail::exp_lcm(lead(chosen->first), lead(chosen->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            ExpVec l = detail::exp_lcm(lead(it->first), lead(it->second));
            if (ord.less(l, best_lcm)) {
                chosen = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *chosen;
        pending.erase(chosen);

        const ExpVec &li = lead(i), &lj = lead(j);
        ExpVec l = detail::exp_lcm(li, lj);
        {
            bool coprime = true;
            for (std::size_t k = 0; k < li.size() && coprime; ++k)
                if (li[k] > 0 && lj[k] > 0) coprime = false;
            if (coprime) continue;
        }
        MultiPoly s(basis[i].ring);
        const auto& ti = detail::leading_term(basis[i], ord);
        const auto& tj = detail::leading_term(basis[j], ord);
        detail::subtract_multiple(s, Rat(-1) / ti.second, detail::exp_sub(l, li), basis[i]);
        detail::subtract_multiple(s, Rat(1) / tj.second, detail::exp_sub(l, lj), basis[j]);
        MultiPoly r = normal_form(std::move(s), basis, ord);
        if (!r.is_zero()) {
            basis.push_back(std::move(r));
            for (std::size_t k = 0; k + 1 < basis.size(); ++k)
                pending.insert({k, basis.size() - 1});
        }
    }

    // minimal generators: drop anything whose lead another kept lead divides
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const ExpVec& li = detail::leading_term(basis[i], ord).first;
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            const ExpVec& lj = detail::leading_term(basis[j], ord).first;
            if (detail::exp_divides(lj, li) && (lj != li || j < i)) keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }

    // tail reduction against the other elements, then make monic
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
        const auto& lt = detail::leading_term(r, ord);
        reduced.push_back(Rat(1) / lt.second * r);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(detail::leading_term(a, ord).first, detail::leading_term(b, ord).first);
    });
    out.elements = std::move(reduced);
    return out;
}

// Extension of a ring by one fresh auxiliary variable (appended last, degree
// zero); used for localization tricks.
inline std::shared_ptr<const RingSpec> extend_ring(const std::shared_ptr<const RingSpec>& ring,
                                                   const std::string& name) {
    auto names = ring->names;
    names.push_back(name);
    auto degrees = ring->degrees;
    degrees.push_back(zero_element(ring->group));
    return make_ring_spec(ring->group, std::move(names), std::move(degrees));
}

inline MultiPoly lift_to_extension(const std::shared_ptr<const RingSpec>& ext,
                                   const MultiPoly& p) {
    MultiPoly q(ext);
    for (const auto& [e, c] : p.terms) {
        ExpVec m = e;
        m.resize(ext->arity(), 0u);
        q.terms.emplace(std::move(m), c);
    }
    return q;
}

// Does g vanish on the common zero locus of gens? Decided by testing whether
// gens together with 1 - t*g generate the unit ideal (t fresh, last).
inline bool radical_membership(const MultiPoly& g, const std::vector<MultiPoly>& gens) {
    auto ext = extend_ring(g.ring, "_rab");
    std::vector<MultiPoly> sys;
    for (const auto& f : gens) sys.push_back(lift_to_extension(ext, f));
    MultiPoly one_minus_tg(ext);
    one_minus_tg.add_term(ExpVec(ext->arity(), 0u), Rat(1));
    for (const auto& [e, c] : g.terms) {
        ExpVec m = e;
        m.resize(ext->arity(), 0u);
        m.back() += 1;
        one_minus_tg.add_term(m, -c);
    }
    sys.push_back(std::move(one_minus_tg));
    return buchberger(sys, MonomialOrder{}).is_unit_ideal();
}

inline bool unit_ideal(const std::vector<MultiPoly>& gens) {
    return buchberger(gens, MonomialOrder{}).is_unit_ideal();
}

}  // namespace toric_ci

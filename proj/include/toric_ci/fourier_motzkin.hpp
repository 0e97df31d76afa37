#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "toric_ci/rational.hpp"

namespace toric_ci {

// One inequality a . x <= b with integer content-normalized coefficients.
struct LinIneq {
    IntVec a;
    Int b;

    bool operator<(const LinIneq& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

// Conjunction of inequalities over nvars real variables.
struct IneqSystem {
    std::size_t nvars = 0;
    std::vector<LinIneq> rows;
};

namespace detail {

inline void normalize_ineq(LinIneq& r) {
    Int g(0);
    for (const auto& x : r.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.b.get_mpz_t());
    if (g > 1) {
        for (auto& x : r.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r.b.get_mpz_t(), r.b.get_mpz_t(), g.get_mpz_t());
    }
}

inline bool is_trivial(const LinIneq& r) {
    for (const auto& x : r.a)
        if (x != 0) return false;
    return r.b >= 0;
}

}  // namespace detail

// Fourier-Motzkin elimination of the last variable. Exact over Q; output
// rows are content-normalized and deduplicated.
inline IneqSystem project_last(const IneqSystem& s) {
    IneqSystem out;
    out.nvars = s.nvars - 1;
    std::set<LinIneq> seen;
    auto push = [&](LinIneq r) {
        detail::normalize_ineq(r);
        if (detail::is_trivial(r)) return;
        if (seen.insert(r).second) out.rows.push_back(std::move(r));
    };
    std::vector<const LinIneq*> pos, neg;
    for (const auto& r : s.rows) {
        const Int& c = r.a[s.nvars - 1];
        if (c > 0) pos.push_back(&r);
        else if (c < 0) neg.push_back(&r);
        else {
            LinIneq copy{IntVec(r.a.begin(), r.a.end() - 1), r.b};
            push(std::move(copy));
        }
    }
    for (const auto* p : pos)
        for (const auto* n : neg) {
            const Int& alpha = p->a[s.nvars - 1];   // > 0
            const Int& beta = n->a[s.nvars - 1];    // < 0
            LinIneq r;
            r.a.resize(s.nvars - 1);
            for (std::size_t j = 0; j + 1 < s.nvars; ++j)
                r.a[j] = alpha * n->a[j] - beta * p->a[j];
            r.b = alpha * n->b - beta * p->b;
            push(std::move(r));
        }
    return out;
}

// Feasibility over the reals, by eliminating every variable.
inline bool feasible(IneqSystem s) {
    while (s.nvars > 0) s = project_last(s);
    for (const auto& r : s.rows)
        if (r.b < 0) return false;
    return true;
}

// Integer range of the last variable of s given integer values for the
// preceding ones. nullopt on an unbounded side; an empty range is returned
// as (lo, hi) with lo > hi.
struct VarRange {
    std::optional<Int> lo, hi;
};

inline VarRange last_var_range(const IneqSystem& s, const IntVec& prefix) {
    VarRange r;
    for (const auto& row : s.rows) {
        const Int& c = row.a[s.nvars - 1];
        if (c == 0) continue;
        Rat rest(row.b);
        for (std::size_t j = 0; j + 1 < s.nvars; ++j) rest -= Rat(row.a[j]) * Rat(prefix[j]);
        Rat bound = rest / Rat(c);
        if (c > 0) {
            Int h = floor_rat(bound);
            if (!r.hi || h < *r.hi) r.hi = h;
        } else {
            Int l = ceil_rat(bound);
            if (!r.lo || l > *r.lo) r.lo = l;
        }
    }
    return r;
}

}  // namespace toric_ci

#pragma once

#include <cassert>
#include <compare>
#include <optional>
#include <string>

#include "toric_ci/smith.hpp"

namespace toric_ci {

// Z^free_rank + Z/t1 + Z/t2 + ... with t1 | t2 | ..., each ti >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    IntVec torsion;

    bool operator==(const AbelianGroup&) const = default;
};

// Element in the coordinates of an AbelianGroup: free part first, then one
// canonical residue in [0, ti) per torsion factor.
struct GroupElement {
    IntVec free;
    IntVec torsion;
    IntVec moduli;  // copy of the group's torsion orders

    void canonicalize() {
        for (std::size_t i = 0; i < torsion.size(); ++i)
            torsion[i] = mod_canonical(torsion[i], moduli[i]);
    }

    bool is_zero() const {
        for (const auto& x : free)
            if (x != 0) return false;
        for (const auto& x : torsion)
            if (x != 0) return false;
        return true;
    }

    GroupElement operator+(const GroupElement& o) const {
        assert(free.size() == o.free.size() && moduli == o.moduli);
        GroupElement r = *this;
        for (std::size_t i = 0; i < free.size(); ++i) r.free[i] += o.free[i];
        for (std::size_t i = 0; i < torsion.size(); ++i) r.torsion[i] += o.torsion[i];
        r.canonicalize();
        return r;
    }
    GroupElement operator-(const GroupElement& o) const {
        assert(free.size() == o.free.size() && moduli == o.moduli);
        GroupElement r = *this;
        for (std::size_t i = 0; i < free.size(); ++i) r.free[i] -= o.free[i];
        for (std::size_t i = 0; i < torsion.size(); ++i) r.torsion[i] -= o.torsion[i];
        r.canonicalize();
        return r;
    }
    GroupElement operator-() const {
        GroupElement r = *this;
        for (auto& x : r.free) x = -x;
        for (auto& x : r.torsion) x = -x;
        r.canonicalize();
        return r;
    }
    friend GroupElement operator*(const Int& c, const GroupElement& g) {
        GroupElement r = g;
        for (auto& x : r.free) x *= c;
        for (auto& x : r.torsion) x *= c;
        r.canonicalize();
        return r;
    }

    bool operator==(const GroupElement& o) const {
        return free == o.free && torsion == o.torsion && moduli == o.moduli;
    }
    // Lexicographic, for use as map keys.
    bool operator<(const GroupElement& o) const {
        if (free != o.free) return free < o.free;
        return torsion < o.torsion;
    }
};

inline GroupElement zero_element(const AbelianGroup& g) {
    GroupElement e;
    e.free.assign(g.free_rank, Int(0));
    e.torsion.assign(g.torsion.size(), Int(0));
    e.moduli = g.torsion;
    return e;
}

// Presentation of G = Z^n / column-lattice(A), with an explicit projection
// Z^n -> G and a section G -> Z^n picking a preimage of each element.
struct CokernelPresentation {
    AbelianGroup group;
    std::size_t ambient = 0;   // n
    std::size_t rank = 0;      // rank of A
    std::size_t ones_end = 0;  // rows of U with trivial diagonal (di == 1)
    IntMatrix u;               // from the Smith form of A
    IntMatrix u_inv;

    GroupElement project(const IntVec& v) const {
        assert(v.size() == ambient);
        GroupElement e = zero_element(group);
        for (std::size_t i = rank; i < ambient; ++i) {
            Int acc(0);
            for (std::size_t j = 0; j < ambient; ++j) acc += u(i, j) * v[j];
            e.free[i - rank] = acc;
        }
        for (std::size_t i = ones_end; i < rank; ++i) {
            Int acc(0);
            for (std::size_t j = 0; j < ambient; ++j) acc += u(i, j) * v[j];
            e.torsion[i - ones_end] = acc;
        }
        e.canonicalize();
        return e;
    }

    // Preimage of g under project (one representative of the coset).
    IntVec section(const GroupElement& g) const {
        IntVec lift(ambient, Int(0));
        for (std::size_t i = rank; i < ambient; ++i) lift[i] = g.free[i - rank];
        for (std::size_t i = ones_end; i < rank; ++i) lift[i] = g.torsion[i - ones_end];
        return mul(u_inv, lift);
    }
};

// A has one row per ambient coordinate; its columns span the relation
// lattice. The quotient's free rows of U get their sign normalized so the
// first nonzero entry is positive.
inline CokernelPresentation cokernel_presentation(const IntMatrix& a) {
    CokernelPresentation p;
    p.ambient = a.rows;
    SmithForm f = smith_normal_form(a);
    p.rank = smith_rank(f);
    p.ones_end = 0;
    while (p.ones_end < p.rank && f.s(p.ones_end, p.ones_end) == 1) ++p.ones_end;
    for (std::size_t i = p.ones_end; i < p.rank; ++i) p.group.torsion.push_back(f.s(i, i));
    p.group.free_rank = p.ambient - p.rank;
    for (std::size_t i = p.rank; i < p.ambient; ++i) {
        std::size_t j = 0;
        while (j < p.ambient && f.u(i, j) == 0) ++j;
        if (j < p.ambient && f.u(i, j) < 0) f.u.negate_row(i);
    }
    p.u = f.u;
    p.u_inv = inverse_unimodular(f.u);
    return p;
}

// Reduce a set of integer columns to a basis of the lattice they span
// (integer column echelon; deterministic).
inline IntMatrix lattice_column_basis(IntMatrix b) {
    std::size_t j0 = 0;
    for (std::size_t i = 0; i < b.rows && j0 < b.cols; ++i) {
        for (;;) {
            std::size_t best = b.cols;
            for (std::size_t j = j0; j < b.cols; ++j) {
                if (b(i, j) == 0) continue;
                if (best == b.cols || abs(b(i, j)) < abs(b(i, best))) best = j;
            }
            if (best == b.cols) break;  // row i clear beyond j0
            b.swap_cols(j0, best);
            bool clear = true;
            for (std::size_t j = j0 + 1; j < b.cols; ++j) {
                if (b(i, j) == 0) continue;
                Int q = b(i, j) / b(i, j0);
                if (q != 0) b.add_col(j, j0, -q);
                if (b(i, j) != 0) clear = false;
            }
            if (clear) {
                if (b(i, j0) < 0) b.negate_col(j0);
                ++j0;
                break;
            }
        }
    }
    IntMatrix basis(b.rows, j0);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < j0; ++j) basis(i, j) = b(i, j);
    return basis;
}

struct GroupSolution {
    IntVec particular;   // one integer solution
    IntMatrix kernel;    // columns span {a : sum ai * deg_i = 0} as a lattice
};

// Solve sum_i a_i * degrees[i] = target over the integers. Torsion
// congruences become exact equations with one auxiliary unknown per factor.
inline std::optional<GroupSolution> solve_over_group(const std::vector<GroupElement>& degrees,
                                                     const GroupElement& target) {
    const std::size_t k = degrees.size();
    const std::size_t fr = target.free.size();
    const std::size_t m = target.moduli.size();
    for (const auto& d : degrees)
        assert(d.free.size() == fr && d.moduli == target.moduli);

    IntMatrix mat(fr + m, k + m);
    IntVec rhs(fr + m, Int(0));
    for (std::size_t i = 0; i < fr; ++i) {
        for (std::size_t j = 0; j < k; ++j) mat(i, j) = degrees[j].free[i];
        rhs[i] = target.free[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) mat(fr + i, j) = degrees[j].torsion[i];
        mat(fr + i, k + i) = target.moduli[i];
        rhs[fr + i] = target.torsion[i];
    }

    SmithForm f = smith_normal_form(mat);
    std::size_t r = smith_rank(f);
    IntVec c = mul(f.u, rhs);
    IntVec y(k + m, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < r) {
            if (c[i] % f.s(i, i) != 0) return std::nullopt;
            y[i] = c[i] / f.s(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    IntVec x = mul(f.v, y);

    GroupSolution sol;
    sol.particular.assign(x.begin(), x.begin() + k);
    IntMatrix proj(k, (k + m) - r);
    for (std::size_t j = r; j < k + m; ++j)
        for (std::size_t i = 0; i < k; ++i) proj(i, j - r) = f.v(i, j);
    sol.kernel = lattice_column_basis(proj);
    return sol;
}

}  // namespace toric_ci

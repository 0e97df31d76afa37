#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "toric_ci/fourier_motzkin.hpp"
#include "toric_ci/linear.hpp"

using namespace toric_ci;

namespace {

std::vector<SparseRow> to_sparse(const IntMatrix& m) {
    std::vector<SparseRow> rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) rows[i].emplace_back(std::uint32_t(j), m(i, j));
    return rows;
}

std::vector<std::vector<Rat>> to_rational(const IntMatrix& m) {
    std::vector<std::vector<Rat>> q(m.rows, std::vector<Rat>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) q[i][j] = Rat(m(i, j));
    return q;
}

}  // namespace

TEST_CASE("sparse rank agrees with dense gaussian elimination") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix m = oracle::random_matrix(rng, 12, 5);
        REQUIRE(rank_of_rows(to_sparse(m)) == oracle::rank_gauss(to_rational(m)));
    }
}

TEST_CASE("sparse rank handles very sparse wide matrices") {
    std::mt19937_64 rng(6021);
    std::uniform_int_distribution<int> colpick(0, 199);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int iter = 0; iter < 20; ++iter) {
        IntMatrix m(40, 200);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (int t = 0; t < 4; ++t) m(i, colpick(rng)) = val(rng);
        REQUIRE(rank_of_rows(to_sparse(m)) == oracle::rank_gauss(to_rational(m)));
    }
}

TEST_CASE("rank is additive over block-diagonal pieces") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 50; ++iter) {
        IntMatrix a = oracle::random_matrix(rng, 6, 4);
        IntMatrix b = oracle::random_matrix(rng, 6, 4);
        std::vector<SparseRow> rows;
        for (auto& r : to_sparse(a)) rows.push_back(r);
        for (auto& r : to_sparse(b)) {
            for (auto& [c, v] : r) c += std::uint32_t(a.cols);
            rows.push_back(r);
        }
        REQUIRE(rank_of_rows(rows) ==
                oracle::rank_gauss(to_rational(a)) + oracle::rank_gauss(to_rational(b)));
    }
}

TEST_CASE("duplicated rows do not inflate the rank") {
    IntMatrix m(60, 120);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> val(-3, 3);
    for (std::size_t i = 0; i < 60; ++i)
        for (std::size_t j = 0; j < 120; ++j) m(i, j) = val(rng);
    auto rows = to_sparse(m);
    auto twice = rows;
    twice.insert(twice.end(), rows.begin(), rows.end());
    REQUIRE(rank_of_rows(twice) == rank_of_rows(rows));
    REQUIRE(rank_of_rows(twice) == oracle::rank_gauss(to_rational(m)));
}

TEST_CASE("rational rank clears denominators correctly") {
    std::vector<std::vector<Rat>> m = {
        {Rat(1, 2), Rat(1, 3)},
        {Rat(3, 2), Rat(2, 1)},
        {Rat(0), Rat(0)},
    };
    REQUIRE(rank_of_dense(m) == 2);
    std::vector<std::vector<Rat>> singular = {
        {Rat(1, 2), Rat(1, 3)},
        {Rat(3, 2), Rat(1, 1)},  // 3 * row0
        {Rat(3), Rat(2)},        // 6 * row0
    };
    REQUIRE(rank_of_dense(singular) == 1);
    REQUIRE(oracle::rank_gauss(singular) == 1);
}

namespace {

IneqSystem make_system(std::size_t nvars, std::vector<std::pair<std::vector<int>, int>> rows) {
    IneqSystem s;
    s.nvars = nvars;
    for (auto& [a, b] : rows) {
        LinIneq r;
        for (int x : a) r.a.push_back(Int(x));
        r.b = b;
        s.rows.push_back(std::move(r));
    }
    return s;
}

// Rational feasibility with the last variable free and the others fixed.
bool fix_prefix_feasible(const IneqSystem& s, const std::vector<int>& prefix) {
    std::optional<Rat> lo, hi;
    for (const auto& r : s.rows) {
        Rat rest(r.b);
        for (std::size_t j = 0; j + 1 < s.nvars; ++j) rest -= Rat(r.a[j]) * Rat(prefix[j]);
        const Int& c = r.a[s.nvars - 1];
        if (c == 0) {
            if (rest < 0) return false;
        } else if (c > 0) {
            Rat bound = rest / Rat(c);
            if (!hi || bound < *hi) hi = bound;
        } else {
            Rat bound = rest / Rat(c);
            if (!lo || bound > *lo) lo = bound;
        }
    }
    return !(lo && hi && *lo > *hi);
}

}  // namespace

TEST_CASE("projection of the last variable is exact") {
    std::mt19937_64 rng(777001);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> rhs(-6, 8);
    std::uniform_int_distribution<int> nrows(1, 6);
    for (int iter = 0; iter < 150; ++iter) {
        IneqSystem s;
        s.nvars = 3;
        int k = nrows(rng);
        for (int i = 0; i < k; ++i) {
            LinIneq r;
            for (int j = 0; j < 3; ++j) r.a.push_back(Int(coef(rng)));
            r.b = rhs(rng);
            s.rows.push_back(std::move(r));
        }
        IneqSystem p = project_last(s);
        REQUIRE(p.nvars == 2);
        for (int x = -4; x <= 4; ++x)
            for (int y = -4; y <= 4; ++y) {
                bool in_proj = true;
                for (const auto& r : p.rows)
                    if (r.a[0] * x + r.a[1] * y > r.b) {
                        in_proj = false;
                        break;
                    }
                REQUIRE(in_proj == fix_prefix_feasible(s, {x, y}));
            }
    }
}

TEST_CASE("feasibility of small systems") {
    REQUIRE(feasible(make_system(1, {{{1}, 3}, {{-1}, -1}})));    // 1 <= x <= 3
    REQUIRE_FALSE(feasible(make_system(1, {{{1}, 1}, {{-1}, -2}})));
    REQUIRE(feasible(make_system(2, {{{1, 1}, 2}, {{-1, 0}, 0}, {{0, -1}, 0}})));
    REQUIRE_FALSE(feasible(make_system(2, {{{1, 1}, -1}, {{-1, 0}, 0}, {{0, -1}, 0}})));
    // empty system over zero variables
    REQUIRE(feasible(IneqSystem{}));
}

TEST_CASE("integer bounds for the innermost enumeration variable") {
    // 2x <= 7 and -3x <= -4, no other variables
    auto s = make_system(1, {{{2}, 7}, {{-3}, -4}});
    VarRange r = last_var_range(s, {});
    REQUIRE(r.lo);
    REQUIRE(r.hi);
    REQUIRE(*r.lo == 2);
    REQUIRE(*r.hi == 3);

    // x1 + x2 <= 5, -x2 <= 0, prefix x1 = 2
    auto s2 = make_system(2, {{{1, 1}, 5}, {{0, -1}, 0}});
    VarRange r2 = last_var_range(s2, {Int(2)});
    REQUIRE(*r2.lo == 0);
    REQUIRE(*r2.hi == 3);

    // unbounded above: -x <= 0
    auto s3 = make_system(1, {{{-1}, 0}});
    VarRange r3 = last_var_range(s3, {});
    REQUIRE(r3.lo);
    REQUIRE_FALSE(r3.hi);
}

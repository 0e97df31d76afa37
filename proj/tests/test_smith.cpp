#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "toric_ci/smith.hpp"

using namespace toric_ci;

static bool is_unimodular(const IntMatrix& m) {
    Int d = oracle::det_cofactor(m);
    return d == 1 || d == -1;
}

static void check_contract(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    REQUIRE(is_unimodular(f.u));
    REQUIRE(is_unimodular(f.v));
    REQUIRE(mul(mul(f.u, a), f.v) == f.s);
    const std::size_t n = std::min(a.rows, a.cols);
    for (std::size_t i = 0; i < f.s.rows; ++i)
        for (std::size_t j = 0; j < f.s.cols; ++j)
            if (i != j) REQUIRE(f.s(i, j) == 0);
    IntVec expected = oracle::smith_diagonal_by_minors(a);
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(f.s(i, i) >= 0);
        REQUIRE(f.s(i, i) == expected[i]);
        if (i + 1 < n && f.s(i, i) != 0) REQUIRE(f.s(i + 1, i + 1) % f.s(i, i) == 0);
    }
}

TEST_CASE("smith normal form of diag(2,3)", "[smith]") {
    IntMatrix a{{2, 0}, {0, 3}};
    SmithForm f = smith_normal_form(a);
    REQUIRE(f.s(0, 0) == 1);
    REQUIRE(f.s(1, 1) == 6);
    check_contract(a);
}

TEST_CASE("smith normal form of [[2,4],[6,8]]", "[smith]") {
    IntMatrix a{{2, 4}, {6, 8}};
    SmithForm f = smith_normal_form(a);
    REQUIRE(f.s(0, 0) == 2);
    REQUIRE(f.s(1, 1) == 4);
    check_contract(a);
}

TEST_CASE("smith handles zero and rectangular matrices", "[smith]") {
    check_contract(IntMatrix(3, 2));
    check_contract(IntMatrix{{0, 0, 0}, {0, 5, 0}});
    check_contract(IntMatrix{{1, 2, 3}});
    check_contract(IntMatrix{{4}, {6}});
}

TEST_CASE("smith is deterministic", "[smith]") {
    IntMatrix a{{3, -1, 2}, {0, 4, 7}, {5, 5, 5}};
    SmithForm f1 = smith_normal_form(a);
    SmithForm f2 = smith_normal_form(a);
    REQUIRE(f1.u == f2.u);
    REQUIRE(f1.s == f2.s);
    REQUIRE(f1.v == f2.v);
}

TEST_CASE("smith contract on random matrices", "[smith][property]") {
    std::mt19937 rng(20260816);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix a = oracle::random_matrix(rng, 5, 9);
        check_contract(a);
    }
}

TEST_CASE("integer kernel spans the nullspace", "[smith]") {
    IntMatrix a{{1, 1, 1}};
    IntMatrix k = integer_kernel(a);
    REQUIRE(k.cols == 2);
    for (std::size_t j = 0; j < k.cols; ++j) {
        Int acc(0);
        for (std::size_t i = 0; i < 3; ++i) acc += a(0, i) * k(i, j);
        REQUIRE(acc == 0);
    }
}

TEST_CASE("bareiss rank and determinant match oracle", "[linear][property]") {
    std::mt19937 rng(987654);
    for (int iter = 0; iter < 150; ++iter) {
        IntMatrix a = oracle::random_matrix(rng, 5, 6);
        std::vector<oracle::RatVec> rows(a.rows, oracle::RatVec(a.cols));
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t j = 0; j < a.cols; ++j) rows[i][j] = Rat(a(i, j));
        REQUIRE(bareiss_rank(a) == oracle::rank_gauss(rows));
        if (a.rows == a.cols) REQUIRE(det_bareiss(a) == oracle::det_cofactor(a));
    }
}

TEST_CASE("inverse of unimodular matrices", "[linear]") {
    IntMatrix u{{1, 2, 0}, {0, 1, 3}, {0, 0, 1}};
    IntMatrix inv = inverse_unimodular(u);
    REQUIRE(mul(u, inv) == IntMatrix::identity(3));
    REQUIRE(mul(inv, u) == IntMatrix::identity(3));
}

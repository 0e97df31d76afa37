#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "toric_ci/cayley.hpp"
#include "toric_ci/checks.hpp"

using namespace toric_ci;

TEST_CASE("quasi-smoothness of single hypersurfaces") {
    SECTION("diagonal quintic is quasi-smooth") {
        Fan p4 = fixtures::projective_space(4);
        auto ring = fixtures::cox_ring(p4);
        auto f = parse_polynomial(ring, "x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
        auto res = quasi_smooth_check(p4, {f});
        CHECK(res.verdict == SmoothVerdict::QuasiSmooth);
        CHECK(res.witness.empty());
    }
    SECTION("rank-three quadric has a singular point") {
        Fan p3 = fixtures::projective_space(3);
        auto ring = fixtures::cox_ring(p3);
        auto f = parse_polynomial(ring, "x1^2 + x2^2 + x3^2");
        auto res = quasi_smooth_check(p3, {f});
        CHECK(res.verdict == SmoothVerdict::NotQuasiSmooth);
        CHECK(res.witness == "x4");  // the singularity sits where only x4 survives
    }
    SECTION("cuspidal cubic curve") {
        Fan p2 = fixtures::projective_plane();
        auto ring = fixtures::cox_ring(p2);
        auto f = parse_polynomial(ring, "x1^3 + x2^2*x3");
        auto res = quasi_smooth_check(p2, {f});
        CHECK(res.verdict == SmoothVerdict::NotQuasiSmooth);
        CHECK(res.witness == "x3");
    }
    SECTION("smooth conic") {
        Fan p2 = fixtures::projective_plane();
        auto ring = fixtures::cox_ring(p2);
        auto f = parse_polynomial(ring, "x1^2 + x2^2 + x3^2");
        CHECK(quasi_smooth_check(p2, {f}).verdict == SmoothVerdict::QuasiSmooth);
    }
}

TEST_CASE("quasi-smoothness of systems") {
    SECTION("two coordinates on the line cut nothing") {
        Fan p1 = fixtures::projective_line();
        auto ring = fixtures::cox_ring(p1);
        auto f1 = parse_polynomial(ring, "x1");
        auto f2 = parse_polynomial(ring, "x2");
        CHECK(quasi_smooth_check(p1, {f1, f2}).verdict == SmoothVerdict::QuasiSmoothEmpty);
    }
    SECTION("diagonal quadric pairs are quasi-smooth") {
        Fan p3 = fixtures::projective_space(3);
        auto ring = fixtures::cox_ring(p3);
        auto f1 = parse_polynomial(ring, "x1^2 + x2^2 + x3^2 + x4^2");
        auto f2 = parse_polynomial(ring, "x1^2 + 2*x2^2 + 3*x3^2");
        auto f3 = parse_polynomial(ring, "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2");
        CHECK(quasi_smooth_check(p3, {f1, f2}).verdict == SmoothVerdict::QuasiSmooth);
        CHECK(quasi_smooth_check(p3, {f1, f3}).verdict == SmoothVerdict::QuasiSmooth);
    }
    SECTION("a double line meets itself") {
        Fan p3 = fixtures::projective_space(3);
        auto ring = fixtures::cox_ring(p3);
        auto f1 = parse_polynomial(ring, "x1^2");
        auto f2 = parse_polynomial(ring, "x2^2");
        auto res = quasi_smooth_check(p3, {f1, f2});
        CHECK(res.verdict == SmoothVerdict::NotQuasiSmooth);
    }
}

TEST_CASE("nondegeneracy over torus strata") {
    SECTION("diagonal quintic") {
        Fan p4 = fixtures::projective_space(4);
        auto ring = fixtures::cox_ring(p4);
        auto f = parse_polynomial(ring, "x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
        CHECK(nondegenerate_check(p4, {f}).nondegenerate);
    }
    SECTION("quadric missing a variable degenerates on a facet stratum") {
        Fan p3 = fixtures::projective_space(3);
        auto ring = fixtures::cox_ring(p3);
        auto f1 = parse_polynomial(ring, "x1^2 + x2^2 + x3^2 + x4^2");
        auto f2 = parse_polynomial(ring, "x1^2 + 2*x2^2 + 3*x3^2");
        auto res = nondegenerate_check(p3, {f1, f2});
        CHECK_FALSE(res.nondegenerate);
        CHECK(res.witness_cone == std::vector<int>{0, 1, 2});
        CHECK(res.witness_subset == std::vector<int>{1});
    }
    SECTION("full diagonal quadric pair is nondegenerate") {
        Fan p3 = fixtures::projective_space(3);
        auto ring = fixtures::cox_ring(p3);
        auto f1 = parse_polynomial(ring, "x1^2 + x2^2 + x3^2 + x4^2");
        auto f2 = parse_polynomial(ring, "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2");
        CHECK(nondegenerate_check(p3, {f1, f2}).nondegenerate);
    }
    SECTION("conic through a torus-fixed point") {
        Fan p2 = fixtures::projective_plane();
        auto ring = fixtures::cox_ring(p2);
        auto f = parse_polynomial(ring, "x1^2 + x2^2 + x2*x3");
        auto res = nondegenerate_check(p2, {f});
        CHECK_FALSE(res.nondegenerate);
        CHECK(res.witness_cone == std::vector<int>{0, 1});
        CHECK(res.witness_subset == std::vector<int>{0});
    }
    SECTION("coordinate product on a product of lines") {
        Fan pp = fixtures::p1_cross_p1();
        auto ring = fixtures::cox_ring(pp);
        auto f = parse_polynomial(ring, "x1*x2");
        CHECK(quasi_smooth_check(pp, {f}).verdict == SmoothVerdict::QuasiSmooth);
        auto res = nondegenerate_check(pp, {f});
        CHECK_FALSE(res.nondegenerate);
        CHECK(res.witness_cone == std::vector<int>{0});
        CHECK(res.witness_subset == std::vector<int>{0});
    }
}

TEST_CASE("the combined hypersurface mirrors the system") {
    Fan p3 = fixtures::projective_space(3);
    auto ring = fixtures::cox_ring(p3);

    SECTION("quasi-smooth pair lifts to a quasi-smooth hypersurface") {
        auto f1 = parse_polynomial(ring, "x1^2 + x2^2 + x3^2 + x4^2");
        auto f2 = parse_polynomial(ring, "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2");
        CayleySetup cs = build_cayley(p3, {f1, f2});
        REQUIRE(cs.pe_fan);
        CHECK(quasi_smooth_check(*cs.pe_fan, {cs.F}).verdict == SmoothVerdict::QuasiSmooth);
    }
    SECTION("singular pair lifts to a singular hypersurface") {
        auto f1 = parse_polynomial(ring, "x1^2");
        auto f2 = parse_polynomial(ring, "x2^2");
        CayleySetup cs = build_cayley(p3, {f1, f2});
        REQUIRE(cs.pe_fan);
        CHECK(quasi_smooth_check(p3, {f1, f2}).verdict == SmoothVerdict::NotQuasiSmooth);
        CHECK(quasi_smooth_check(*cs.pe_fan, {cs.F}).verdict == SmoothVerdict::NotQuasiSmooth);
    }
}

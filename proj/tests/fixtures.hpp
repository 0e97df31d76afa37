#pragma once

// Standard fans and rings shared across the test files.

#include <string>
#include <vector>

#include "toric_ci/cayley.hpp"
#include "toric_ci/fan.hpp"
#include "toric_ci/ring.hpp"

namespace fixtures {

using namespace toric_ci;

inline IntVec iv(std::vector<int> xs) {
    IntVec v;
    for (int x : xs) v.push_back(Int(x));
    return v;
}

inline Fan make_fan(std::size_t rank, std::vector<std::vector<int>> rays,
                    std::vector<std::vector<int>> cones) {
    Fan f;
    f.lattice_rank = rank;
    for (auto& r : rays) {
        IntVec v;
        for (int x : r) v.push_back(Int(x));
        f.rays.push_back(std::move(v));
    }
    f.max_cones = std::move(cones);
    return f;
}

// P^n: rays e_1..e_n and -(e_1+...+e_n); maximal cones drop one ray each.
inline Fan projective_space(std::size_t n) {
    Fan f;
    f.lattice_rank = n;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec r(n, Int(0));
        r[i] = 1;
        f.rays.push_back(std::move(r));
    }
    f.rays.push_back(IntVec(n, Int(-1)));
    for (std::size_t drop = 0; drop <= n; ++drop) {
        std::vector<int> cone;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != drop) cone.push_back(int(i));
        f.max_cones.push_back(std::move(cone));
    }
    return f;
}

// Same variety as projective_space(2) but with the historical cone order the
// fan tests pin down.
inline Fan projective_plane() {
    return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Fan projective_line() { return make_fan(1, {{1}, {-1}}, {{0}, {1}}); }

inline Fan p1_cross_p1() {
    return make_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

inline Fan p1_cubed() {
    return make_fan(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                    {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                     {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

inline Fan weighted_p112() {
    return make_fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Fan hirzebruch_1() {
    return make_fan(2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// Cox ring of a fan, variables named x1..xn in ray order.
inline std::shared_ptr<const RingSpec> cox_ring(const Fan& fan) {
    return cox_ring_spec(fan, chow_degree_map(fan), "x");
}

}  // namespace fixtures

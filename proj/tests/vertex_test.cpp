// Integer vertex arithmetic: admissible corner combinations, the exact
// independence determinant, and census recovery from type lists.

#include <doctest.h>

#include <algorithm>

#include "a3b/errors.hpp"
#include "a3b/generator.hpp"
#include "a3b/vertex_solver.hpp"
#include "test_util.hpp"

using namespace a3b;

TEST_CASE("vertex types of the all-two-thirds quadrilateral") {
    // Every angle 2/3: any three corners make a full turn, constrained by
    // parity and the no-all-four-kinds rule.
    std::array<double, 4> angles{2.0 / 3, 2.0 / 3, 2.0 / 3, 2.0 / 3};
    auto types = enumerate_vertex_types(angles);
    std::vector<std::array<int, 4>> expected = {
        {0, 0, 1, 2}, {0, 0, 3, 0}, {0, 1, 0, 2}, {0, 1, 2, 0}, {0, 2, 1, 0},
        {0, 3, 0, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}, {2, 0, 1, 0}, {2, 1, 0, 0},
    };
    CHECK(types == expected);
}

TEST_CASE("parity excludes combinations whose angles do sum to a full turn") {
    // alpha + 2 beta + gamma = 2 here, but n_alpha + n_delta = 1 is odd.
    std::array<double, 4> angles{0.6, 0.45, 0.5, 0.3};
    auto types = enumerate_vertex_types(angles, 1e-9, 4);
    CHECK(std::find(types.begin(), types.end(), std::array<int, 4>{1, 2, 1, 0}) == types.end());
}

TEST_CASE("no enumerated type carries all four corner kinds") {
    std::array<double, 4> angles{0.5, 0.5, 0.5, 0.5};
    for (const auto& t : enumerate_vertex_types(angles, 1e-9, 4)) {
        CHECK((t[0] + t[1] + t[2] + t[3]) >= 3);
        CHECK(!(t[0] > 0 && t[1] > 0 && t[2] > 0 && t[3] > 0));
        CHECK((t[0] + t[3]) % 2 == 0);
    }
    CHECK_THROWS_AS(enumerate_vertex_types(std::array<double, 4>{0.0, 0.5, 0.5, 0.5}),
                    domain_error);
}

TEST_CASE("vertex types of the four-column band quadrilateral up to degree eight") {
    auto types = enumerate_vertex_types(sporadic_quad("emt16_bd2_a2c2"), 1e-9, 8);
    std::vector<std::array<int, 4>> expected = {{0, 1, 0, 2}, {0, 4, 0, 0}, {2, 0, 2, 0}};
    CHECK(types == expected);
}

TEST_CASE("independence determinant of type triples") {
    CHECK(coplanarity_check({1, 1, 0, 1}, {0, 1, 2, 0}, {1, 0, 5, 1}) == 0);
    CHECK(coplanarity_check({1, 1, 0, 1}, {0, 1, 2, 0}, {1, 0, 5, 0}) == -1);
    CHECK_THROWS_AS(coplanarity_check({1, 1, 0, 1}, {1, 1, 0, 1}, {0, 1, 2, 0}), domain_error);
}

TEST_CASE("census recovery from type lists") {
    using V = std::vector<long long>;
    auto sols = solve_multiplicities({{1, 1, 0, 1}, {0, 0, 5, 0}}, 10);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == V{10, 2});

    sols = solve_multiplicities({{2, 1, 0, 0}, {0, 0, 3, 0}, {0, 1, 1, 2}}, 12);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == V{6, 2, 6});

    sols = solve_multiplicities({{0, 1, 0, 2}, {2, 0, 2, 0}, {0, 4, 0, 0}}, 16);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == V{8, 8, 2});

    sols = solve_multiplicities({{0, 1, 2, 0}, {2, 0, 0, 2}, {1, 2, 0, 1}}, 16);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == V{8, 6, 4});

    sols = solve_multiplicities({{0, 3, 0, 0}, {2, 0, 2, 0}, {0, 0, 0, 4}}, 24);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == V{8, 12, 6});

    CHECK_THROWS_AS(solve_multiplicities({{1, 1, 0, 1}}, -2), domain_error);
}

TEST_CASE("census recovery lists every solution in ascending order") {
    // Two types that can trade off: x * (1,1,0,1) uses each of three kinds
    // once, so only the gamma count pins the rest.
    auto sols = solve_multiplicities({{1, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 2, 0}}, 4);
    // gamma: y + 2z = 4, with x = 4 fixed by the other kinds.
    REQUIRE(sols.size() == 3);
    CHECK(sols[0] == std::vector<long long>{4, 0, 2});
    CHECK(sols[1] == std::vector<long long>{4, 2, 1});
    CHECK(sols[2] == std::vector<long long>{4, 4, 0});
}

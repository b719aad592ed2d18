// Shared helpers for the unit tests: absolute-tolerance comparison, quad
// literals and census construction.
#pragma once

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "a3b/quad.hpp"

// Absolute-tolerance check; every quantity in this library is O(1), so an
// absolute bound is the right comparison everywhere.
#define CHECK_NEAR(x, y, tol) CHECK(std::fabs((x) - (y)) <= (tol))

namespace testutil {

inline a3b::Quadrilateral make_quad(double alpha, double beta, double gamma, double delta,
                                    double a, double b) {
    a3b::Quadrilateral q;
    q.alpha = alpha;
    q.beta = beta;
    q.gamma = gamma;
    q.delta = delta;
    q.a = a;
    q.b = b;
    return q;
}

using Census = std::map<std::array<int, 4>, int>;

inline Census census(std::vector<std::pair<std::array<int, 4>, int>> entries) {
    Census c;
    for (const auto& [vec, count] : entries) c[vec] = count;
    return c;
}

}  // namespace testutil

// Trigonometric kernel: exact special values, the edge-length relations,
// the closure residuals and the combined quadrilateral check.

#include <doctest.h>

#include <cmath>

#include "a3b/errors.hpp"
#include "a3b/trig.hpp"
#include "test_util.hpp"

using namespace a3b;
using testutil::make_quad;

TEST_CASE("sinpi and cospi are exact at integer and half-integer arguments") {
    CHECK(sinpi(0.0) == 0.0);
    CHECK(sinpi(1.0) == 0.0);
    CHECK(sinpi(2.0) == 0.0);
    CHECK(sinpi(-1.0) == 0.0);
    CHECK(sinpi(0.5) == 1.0);
    CHECK(sinpi(1.5) == -1.0);
    CHECK(sinpi(2.5) == 1.0);
    CHECK(sinpi(-0.5) == -1.0);
    CHECK(cospi(0.0) == 1.0);
    CHECK(cospi(0.5) == 0.0);
    CHECK(cospi(1.0) == -1.0);
    CHECK(cospi(1.5) == 0.0);
    CHECK(cospi(2.0) == 1.0);
    CHECK(cospi(-0.5) == 0.0);
    CHECK(cospi(-1.0) == -1.0);
}

TEST_CASE("sinpi and cospi agree with the plain library functions") {
    for (double x : {0.137, 0.333, 0.789, 1.234, 1.961, -0.41, 5.07}) {
        CHECK_NEAR(sinpi(x), std::sin(pi * x), 1e-15);
        CHECK_NEAR(cospi(x), std::cos(pi * x), 1e-15);
    }
}

TEST_CASE("angle sum residual vanishes on a tile with the correct excess") {
    Quadrilateral q = make_quad(1.0 / 3, 2.0 / 3, 1.0 / 3, 1.0, 0.4, 0.2);
    CHECK_NEAR(angle_sum_residual(q, 12), 0.0, 1e-15);
    CHECK(angle_sum_residual(q, 6) < 0.0);                   // sum too small for f = 6
    CHECK_THROWS_AS(angle_sum_residual(q, 0), domain_error); // no face count
}

TEST_CASE("difference-form closure residual vanishes on the symmetric slice") {
    // alpha = gamma and beta = delta kills the first residual identically.
    for (double x : {0.3, 0.45, 0.77}) {
        auto [rd, rs] = closure_residuals(x, 1.1 - x, x, 1.1 - x);
        CHECK_NEAR(rd, 0.0, 1e-16);
        CHECK(std::fabs(rs) > 1e-3);
    }
}

TEST_CASE("closure residual vanishes at a known family member") {
    // f = 12, beta = 2/3 has the exact angles (1/3, 2/3, 1/3, 1).
    auto [rd, rs] = closure_residuals(1.0 / 3, 2.0 / 3, 1.0 / 3, 1.0);
    CHECK_NEAR(rd, 0.0, 1e-15);
    CHECK(std::fabs(rs) > 0.1); // only one of the two forms holds here
}

TEST_CASE("edge relation reproduces the b edge of a known family member") {
    // Independently computed member at f = 12, beta = 2/3.
    const double a = 0.39182655203060727, b = 0.21634689593878546;
    CHECK_NEAR(cos_b_from_angles(a, 2.0 / 3, 1.0 / 3), cospi(b), 1e-15);
}

TEST_CASE("both cos a expressions agree on a valid quadrilateral") {
    Quadrilateral q = make_quad(0.41189590441260832, 0.9, 0.5, 0.68810409558739168,
                                0.33792452071458793, 0.50064439750111045);
    auto [e1, e2] = cos_a_two_ways(q);
    CHECK_NEAR(e1, cospi(q.a), 1e-12);
    CHECK_NEAR(e2, cospi(q.a), 1e-12);
}

TEST_CASE("cos a expressions refuse straight corners") {
    Quadrilateral q = make_quad(1.0 / 3, 2.0 / 3, 1.0 / 3, 1.0, 0.39182655203060727,
                                0.21634689593878546);
    CHECK_THROWS_AS(cos_a_two_ways(q), singular_error);
    q = make_quad(1.0, 2.0 / 3, 1.0 / 3, 1.0 / 3, 0.4, 0.2);
    CHECK_THROWS_AS(cos_a_two_ways(q), singular_error);
}

TEST_CASE("combined check accepts a valid quadrilateral") {
    Quadrilateral q = make_quad(0.41189590441260832, 0.9, 0.5, 0.68810409558739168,
                                0.33792452071458793, 0.50064439750111045);
    QuadReport r = check_quad(q, 8);
    CHECK(r.in_range);
    CHECK(!r.cos_a_singular);
    CHECK_NEAR(r.angle_sum_residual, 0.0, 1e-12);
    CHECK(std::min(std::fabs(r.r_diff), std::fabs(r.r_sum)) <= 1e-10);
    CHECK(std::fabs(r.cos_b_residual) <= 1e-10);
    CHECK(r.cos_a_residual <= 1e-10);
    CHECK(r.ok);
}

TEST_CASE("combined check skips the cos a relation at a straight corner") {
    Quadrilateral q = make_quad(1.0 / 3, 2.0 / 3, 1.0 / 3, 1.0, 0.39182655203060727,
                                0.21634689593878546);
    QuadReport r = check_quad(q, 12);
    CHECK(r.cos_a_singular);
    CHECK(r.cos_a_residual == 0.0);
    CHECK(r.ok);
}

TEST_CASE("combined check rejects out-of-range and inconsistent data") {
    Quadrilateral q = make_quad(2.1, 0.5, 0.25, 0.4, 0.3, 0.2);
    QuadReport r = check_quad(q, 16);
    CHECK(!r.in_range);
    CHECK(!r.ok);
    // Right ranges but a fabricated edge: the edge relations must object.
    q = make_quad(0.41189590441260832, 0.9, 0.5, 0.68810409558739168, 0.33792452071458793, 0.77);
    r = check_quad(q, 8);
    CHECK(r.in_range);
    CHECK(!r.ok);
}

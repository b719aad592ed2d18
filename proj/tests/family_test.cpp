// The two-parameter family: closed-form members against independently
// computed references, interval and degeneracy handling, the moduli curve,
// the b-edge minimum, flip admissibility and the quadrilateral predicates.

#include <doctest.h>

#include <cmath>

#include "a3b/errors.hpp"
#include "a3b/family.hpp"
#include "a3b/trig.hpp"
#include "test_util.hpp"

using namespace a3b;

TEST_CASE("beta interval per face count") {
    BetaRange r6 = beta_range(6);
    CHECK_NEAR(r6.lo, 1.0 / 3, 1e-15);
    CHECK_NEAR(r6.hi, 1.5, 1e-15);
    CHECK_NEAR(r6.excluded, 2.0 / 3, 1e-15);
    BetaRange r8 = beta_range(8);
    CHECK_NEAR(r8.lo, 0.5, 1e-15);
    CHECK_NEAR(r8.hi, 1.5, 1e-15);
    CHECK_NEAR(r8.excluded, 0.75, 1e-15);
    CHECK_NEAR(beta_range(16).excluded, 0.875, 1e-15);
    CHECK_THROWS_AS(beta_range(7), domain_error);
    CHECK_THROWS_AS(beta_range(4), domain_error);
}

TEST_CASE("family members match independently computed references") {
    struct Ref {
        int f;
        double beta, alpha, delta, a, b;
    };
    // References computed with an independent high-precision implementation.
    const Ref refs[] = {
        {12, 2.0 / 3, 1.0 / 3, 1.0, 0.39182655203060727, 0.21634689593878546},
        {8, 1.0, 0.35241638234956673, 0.64758361765043327, 1.0 / 3, 0.58043062325516624},
        {8, 0.9, 0.41189590441260832, 0.68810409558739168, 0.33792452071458793,
         0.50064439750111045},
        {6, 1.4, 0.10789620339227494, 0.49210379660772506, 0.42414119585569164,
         1.06477581061298212},
        {6, 0.9, 0.48032840651098977, 0.61967159348901023, 0.33792452071458793,
         0.62964474340395648},
        {10, 0.9, 0.35704465630148297, 0.74295534369851703, 0.33792452071458793,
         0.43248935829090217},
        {16, 0.77, 0.25329734801940961, 0.97670265198059039, 0.35900425941038046,
         0.28265293970194500},
        {50, 1.2, 0.05809689480829737, 0.74190310519170263, 0.35241638234956673,
         0.39969130030154655},
    };
    for (const Ref& r : refs) {
        CAPTURE(r.f);
        CAPTURE(r.beta);
        Quadrilateral q = emt_quad(r.f, r.beta);
        CHECK_NEAR(q.alpha, r.alpha, 1e-13);
        CHECK_NEAR(q.beta, r.beta, 1e-15);
        CHECK_NEAR(q.gamma, 4.0 / r.f, 1e-15);
        CHECK_NEAR(q.delta, r.delta, 1e-13);
        CHECK_NEAR(q.a, r.a, 1e-13);
        CHECK_NEAR(q.b, r.b, 1e-13);
        CHECK_NEAR(q.alpha + q.beta + q.gamma + q.delta, 2.0 + 4.0 / r.f, 1e-13);
    }
}

TEST_CASE("the f = 8, beta = 1 member has tan(pi alpha) = 2") {
    Quadrilateral q = emt_quad(8, 1.0);
    CHECK_NEAR(std::tan(pi * q.alpha), 2.0, 1e-12);
    CHECK_NEAR(q.a, 1.0 / 3, 1e-14);
}

TEST_CASE("family member carries exact affine angle forms") {
    Quadrilateral q = emt_quad(12, 2.0 / 3);
    REQUIRE(q.exact.has_value());
    CHECK((*q.exact)[2].is_constant(Rational(1, 3))); // gamma = 4/f exactly
    // alpha + beta + gamma + delta must cancel to the constant 2 + 4/f.
    AffineAngle sum = (*q.exact)[0] + (*q.exact)[1];
    sum = sum + (*q.exact)[2];
    sum = sum + (*q.exact)[3];
    CHECK(sum.is_constant(Rational(2) + Rational(4, 12)));
}

TEST_CASE("family rejects out-of-interval and degenerate beta") {
    CHECK_THROWS_AS(emt_quad(8, 0.5), domain_error);   // closed endpoint
    CHECK_THROWS_AS(emt_quad(8, 1.5), domain_error);
    CHECK_THROWS_AS(emt_quad(8, 0.75), degeneracy_error);  // rhombus point
    CHECK_THROWS_AS(emt_quad(6, 2.0 / 3), degeneracy_error);
    CHECK_THROWS_AS(emt_quad(6, 0.32), domain_error);
    CHECK_THROWS_AS(emt_quad(7, 1.0), domain_error);
}

TEST_CASE("the excluded point is the rhombus a = b") {
    Quadrilateral q8 = emt_quad_allow_rhombus(8, 0.75);
    CHECK_NEAR(q8.a, q8.b, 1e-12);
    Quadrilateral q10 = emt_quad_allow_rhombus(10, 0.8);
    CHECK_NEAR(q10.a, 0.35241638234956673, 1e-13);
    CHECK_NEAR(q10.b, q10.a, 1e-12);
    Quadrilateral q6 = emt_quad_allow_rhombus(6, 2.0 / 3);
    CHECK_NEAR(q6.a, 0.39182655203060727, 1e-13);
    CHECK_NEAR(q6.b, q6.a, 1e-12);
}

TEST_CASE("edge ranges across the family") {
    // f = 6: a in [1/3, 1), and b crosses 1 exactly where beta crosses 4/3.
    CHECK(emt_quad(6, 1.4).b > 1.0);
    CHECK(emt_quad(6, 1.3).b < 1.0);
    for (double beta : {0.4, 0.7, 1.0, 1.45}) {
        Quadrilateral q = emt_quad_allow_rhombus(6, beta);
        CHECK(q.a >= 1.0 / 3 - 1e-12);
        CHECK(q.a < 1.0);
        CHECK(q.b < 7.0 / 6 + 1e-12);
    }
    // f >= 8: a in [1/3, 1/2) and b < 1/2 + 4/f.
    for (int f : {8, 16, 50}) {
        for (double beta : {0.55, 0.9, 1.2, 1.45}) {
            Quadrilateral q = emt_quad_allow_rhombus(f, beta);
            CHECK(q.a >= 1.0 / 3 - 1e-12);
            CHECK(q.a < 0.5);
            CHECK(q.b < 0.5 + 4.0 / f + 1e-12);
        }
    }
}

TEST_CASE("moduli curve parametrization") {
    auto [lo6, hi6] = moduli_t_range(6);
    CHECK_NEAR(lo6, -0.25, 1e-15);
    CHECK_NEAR(hi6, 1.0 / 3, 1e-15);
    auto [lo8, hi8] = moduli_t_range(8);
    CHECK_NEAR(lo8, -0.25, 1e-15);
    CHECK_NEAR(hi8, 0.25, 1e-15);

    // The defining relation cos(pi t) = 1 / (2 sin(pi a / 2)).
    for (double t : {-0.15, 0.0, 0.15}) {
        Quadrilateral q = moduli_point_quad({8, t});
        CHECK_NEAR(q.beta, 1.0 - 2 * t, 1e-15);
        CHECK_NEAR(cospi(t), 1.0 / (2 * sinpi(q.a / 2)), 1e-12);
    }
    // t = 1/f is the rhombus point, admissible on the curve.
    Quadrilateral qr = moduli_point_quad({10, 0.1});
    CHECK_NEAR(qr.a, qr.b, 1e-12);
    CHECK_NEAR(qr.a, 0.35241638234956673, 1e-13);
    CHECK_THROWS_AS(moduli_point_quad({6, 0.34}), domain_error);
    CHECK_THROWS_AS(moduli_point_quad({8, -0.25}), domain_error);
}

TEST_CASE("b-edge minimum over the family") {
    struct Ref {
        int f;
        double b, beta;
    };
    const Ref refs[] = {
        {6, 0.15143675889238318, 0.47292780265469201},
        {10, 0.08808114092341229, 0.52373964188941425},
        {12, 0.14470312422482400, 0.54562894834298994},
        {16, 0.21153981566574582, 0.58554107910144805},
    };
    for (const Ref& r : refs) {
        CAPTURE(r.f);
        BMinResult m = b_min(r.f);
        CHECK_NEAR(m.b, r.b, 1e-9);
        CHECK_NEAR(m.beta, r.beta, 1e-6);
    }
    // The f = 6 minimum has a closed form.
    BMinResult m6 = b_min(6);
    CHECK_NEAR(m6.b, std::acos((59 + 73 * std::sqrt(73.0)) / 768) / pi, 1e-10);
    CHECK_NEAR(m6.beta, std::atan((5 * std::sqrt(3.0) + std::sqrt(219.0)) / 2) / pi, 1e-6);
    // For f = 8 the infimum 0 sits at the interval's lower end.
    BMinResult m8 = b_min(8);
    CHECK(m8.b >= 0.0);
    CHECK(m8.b < 0.01);
    CHECK(m8.beta < 0.51);
}

TEST_CASE("flip admissibility and case classification") {
    // f = 16, beta = 0.75 pins m = 5: the delta = 1 degenerate case.
    auto c16 = flip_admissible(16, 0.75);
    REQUIRE(c16.has_value());
    CHECK(c16->m == 5);
    CHECK(c16->l == 3);
    CHECK(c16->flavor == FlipFlavor::L1);
    CHECK(c16->degeneracy == FlipDegeneracy::delta_eq_1_triangle);
    CHECK(c16->range_case == 4);
    CHECK(c16->n_max == 2);

    // f = 14, beta = 4/7 pins m = 5 in the top range.
    auto c14 = flip_admissible(14, 4.0 / 7);
    REQUIRE(c14.has_value());
    CHECK(c14->m == 5);
    CHECK(c14->l == 2);
    CHECK(c14->flavor == FlipFlavor::L1);
    CHECK(c14->range_case == 5);
    CHECK(c14->n_max == 3);

    CHECK(!flip_admissible(10, 0.77).has_value()); // beta not of the pinned form
    CHECK(!flip_admissible(6, 1.0).has_value());   // no flips at f = 6

    // f = 8 admits exactly m = 2: beta = 1, the straight-beta triangle case.
    auto cases8 = flip_cases(8);
    REQUIRE(cases8.size() == 1);
    CHECK(cases8[0].m == 2);
    CHECK(cases8[0].l == 2);
    CHECK(cases8[0].flavor == FlipFlavor::L2);
    CHECK(cases8[0].degeneracy == FlipDegeneracy::beta_eq_1_triangle);
    CHECK(cases8[0].range_case == 3);
    CHECK_NEAR(cases8[0].beta, 1.0, 1e-15);

    // f = 16 admits m = 3, 4, 5.
    auto cases16 = flip_cases(16);
    REQUIRE(cases16.size() == 3);
    CHECK(cases16[0].m == 3);
    CHECK(cases16[0].flavor == FlipFlavor::L2);
    CHECK(cases16[0].range_case == 2);
    CHECK(cases16[1].m == 4);
    CHECK(cases16[1].degeneracy == FlipDegeneracy::beta_eq_1_triangle);
    CHECK(cases16[2].m == 5);

    // 4m = f + 2 marks the rhombus-degenerate parameter.
    CHECK(flip_case_for_m(18, 5).degeneracy == FlipDegeneracy::rhombus_a4);

    CHECK_THROWS_AS(flip_case_for_m(16, 2), domain_error); // m <= f/8
    CHECK_THROWS_AS(flip_case_for_m(16, 6), domain_error); // m >= 3f/8
    CHECK_THROWS_AS(flip_case_for_m(6, 2), domain_error);  // f too small
}

TEST_CASE("the block half-length is always at least 2") {
    for (int f = 8; f <= 60; f += 2)
        for (const FlipCase& c : flip_cases(f)) {
            CAPTURE(f);
            CAPTURE(c.m);
            CHECK(c.l >= 2);
            CHECK(c.n_max >= 1);
            CHECK(c.n_max <= 3);
        }
}

TEST_CASE("quadrilateral predicates hold across the family") {
    for (int f : {6, 8, 12, 30}) {
        BetaRange r = beta_range(f);
        for (int i = 1; i <= 7; ++i) {
            double beta = r.lo + (r.hi - r.lo) * i / 8.0;
            if (std::fabs(beta - r.excluded) < 1e-9) continue;
            CAPTURE(f);
            CAPTURE(beta);
            CHECK(quad_predicates(emt_quad(f, beta)).all_ok);
        }
    }
}

TEST_CASE("quadrilateral predicates reject a scrambled angle set") {
    // beta < gamma demands alpha > delta; violate it.
    Quadrilateral q = testutil::make_quad(0.4, 0.3, 0.5, 0.9, 0.4, 0.3);
    QuadPredicates p = quad_predicates(q);
    CHECK(!p.order_beta_gamma_alpha_delta);
    CHECK(!p.all_ok);
}

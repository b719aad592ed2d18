// Generators and enumeration: flip assembly, flip counting against direct
// enumeration, the counting table, the three-layer construction and the
// five isolated tilings.

#include <doctest.h>

#include <set>
#include <stdexcept>

#include "a3b/errors.hpp"
#include "a3b/family.hpp"
#include "a3b/generator.hpp"
#include "a3b/trig.hpp"
#include "test_util.hpp"

using namespace a3b;
using testutil::census;

TEST_CASE("flip enumeration lists gap multisets in canonical order") {
    auto specs = enumerate_flip_tilings(14, 5);
    REQUIRE(specs.size() == 4);
    CHECK(specs[0].gaps == std::vector<int>{5});
    CHECK(specs[1].gaps == std::vector<int>{0, 3});
    CHECK(specs[2].gaps == std::vector<int>{1, 2});
    CHECK(specs[3].gaps == std::vector<int>{0, 0, 1});
    CHECK(enumerate_flip_tilings(16, 3).size() == 3);
}

TEST_CASE("closed-form flip counts match the enumeration") {
    CHECK(count_flip_tilings(14, 5, 3) == 1);
    CHECK(count_flip_tilings(24, 4, 3) == 1);
    for (int f = 8; f <= 40; f += 2) {
        for (const FlipCase& fc : flip_cases(f)) {
            auto specs = enumerate_flip_tilings(f, fc.m);
            for (int n = 1; n <= fc.n_max; ++n) {
                long long listed = 0;
                for (const FlipSpec& s : specs)
                    if (static_cast<int>(s.gaps.size()) == n) ++listed;
                CAPTURE(f);
                CAPTURE(fc.m);
                CAPTURE(n);
                CHECK(count_flip_tilings(f, fc.m, n) == listed);
            }
        }
    }
    CHECK_THROWS_AS(count_flip_tilings(16, 5, 3), domain_error); // beyond n_max
}

TEST_CASE("flip assembly rejects ill-formed gap lists") {
    CHECK_THROWS_AS(apply_flips({16, 5, {0, 0, 0}}), domain_error);  // blocks do not fit
    CHECK_THROWS_AS(apply_flips({16, 5, {3}}), domain_error);        // wrong gap sum
    CHECK_THROWS_AS(apply_flips({16, 5, {-1, 6}}), domain_error);    // negative gap
    CHECK_THROWS_AS(apply_flips({16, 5, {}}), domain_error);         // no blocks
    CHECK_THROWS_AS(apply_flips({16, 5, {1, 1, 1, 2}}), domain_error);
    CHECK_THROWS_AS(apply_flips({16, 7, {1}}), domain_error);        // inadmissible m
}

TEST_CASE("a single flipped block rearranges the vertex census as expected") {
    Tiling t = apply_flips({16, 5, {5}});
    CHECK(t.f() == 16);
    CHECK(vertex_census(t) ==
          census({{{1, 1, 0, 1}, 14}, {{1, 0, 3, 1}, 2}, {{0, 1, 5, 0}, 2}}));
}

TEST_CASE("every flip tiling through f = 24 passes validation") {
    for (int f = 8; f <= 24; f += 2) {
        for (const FlipCase& fc : flip_cases(f)) {
            Quadrilateral q = flip_quad(f, fc.m);
            for (const FlipSpec& spec : enumerate_flip_tilings(f, fc.m)) {
                CAPTURE(f);
                CAPTURE(fc.m);
                CAPTURE(spec.gaps);
                ValidationReport rep = validate(apply_flips(spec), q);
                CHECK(rep.ok);
            }
        }
    }
}

TEST_CASE("pinned-beta quadrilateral carries rational exact forms") {
    Quadrilateral q = flip_quad(16, 4);
    CHECK_NEAR(q.beta, 1.0, 1e-15);
    REQUIRE(q.exact.has_value());
    CHECK((*q.exact)[1].is_constant(Rational(1)));
    CHECK((*q.exact)[2].is_constant(Rational(1, 4)));
    // The rhombus-degenerate parameter is allowed here.
    Quadrilateral qr = flip_quad(18, 5);
    CHECK_NEAR(qr.a, qr.b, 1e-12);
    CHECK_THROWS_AS(flip_quad(16, 2), domain_error);
}

TEST_CASE("count of flip-admissible quadrilaterals per face count") {
    CHECK(q1(8) == 1);
    CHECK(q1(16) == 3);
    CHECK(q1(18) == 3);
    for (int f = 8; f <= 72; f += 2) CHECK(q1(f) == 2 * ((f - 4) / 8) + 1);
    CHECK_THROWS_AS(q1(6), domain_error);
    CHECK_THROWS_AS(q1(9), domain_error);
}

TEST_CASE("counting table rows at selected face counts") {
    struct Row {
        int f, q1, q2, q3;
    };
    for (const Row& r : {Row{8, 1, 0, 1}, Row{16, 3, 2, 1}, Row{18, 3, 1, 2}, Row{20, 5, 2, 3},
                         Row{28, 7, 2, 5}}) {
        CAPTURE(r.f);
        QTable t = q_table(r.f);
        CHECK(t.q1 == r.q1);
        CHECK(t.q2 == r.q2);
        CHECK(t.q3 == r.q3);
        CHECK(t.q1 - t.q2 == t.q3);
    }
}

TEST_CASE("three-layer construction produces the expected censuses") {
    Tiling t3 = three_layer_emt(3);
    CHECK(t3.f() == 12);
    CHECK(vertex_census(t3) ==
          census({{{0, 0, 3, 0}, 2}, {{2, 1, 0, 0}, 6}, {{0, 1, 1, 2}, 6}}));
    Tiling t4 = three_layer_emt(4);
    CHECK(t4.f() == 16);
    CHECK(vertex_census(t4) ==
          census({{{0, 0, 4, 0}, 2}, {{2, 1, 0, 0}, 8}, {{0, 1, 1, 2}, 8}}));
    // Combinatorially fine for any k >= 3, even where no congruent
    // quadrilateral exists.
    Tiling t5 = three_layer_emt(5);
    CHECK(t5.f() == 20);
    CHECK(t5.pairing_ok());
    CHECK_THROWS_AS(three_layer_emt(2), domain_error);
}

TEST_CASE("the five isolated tilings carry their advertised censuses") {
    auto names = sporadic_names();
    REQUIRE(names.size() == 5);
    CHECK(vertex_census(sporadic_tiling("emt12_a2b_c3")) ==
          census({{{2, 1, 0, 0}, 6}, {{0, 0, 3, 0}, 2}, {{0, 1, 1, 2}, 6}}));
    CHECK(vertex_census(sporadic_tiling("emt16_a2b_bcd2")) ==
          census({{{2, 1, 0, 0}, 8}, {{0, 1, 1, 2}, 8}, {{0, 0, 4, 0}, 2}}));
    CHECK(vertex_census(sporadic_tiling("emt16_bd2_a2c2")) ==
          census({{{0, 1, 0, 2}, 8}, {{2, 0, 2, 0}, 8}, {{0, 4, 0, 0}, 2}}));
    CHECK(vertex_census(sporadic_tiling("f16_bc2_a2d2")) ==
          census({{{0, 1, 2, 0}, 8}, {{2, 0, 0, 2}, 6}, {{1, 2, 0, 1}, 4}}));
    CHECK(vertex_census(sporadic_tiling("octa24_b3")) ==
          census({{{0, 3, 0, 0}, 8}, {{2, 0, 2, 0}, 12}, {{0, 0, 0, 4}, 6}}));
    CHECK_THROWS_AS(sporadic_tiling("nope"), domain_error);
    CHECK_THROWS_AS(sporadic_quad("nope"), domain_error);
}

TEST_CASE("quadrilaterals of the isolated tilings match their closed forms") {
    struct Ref {
        const char* name;
        int f;
        double alpha, beta, gamma, delta, a, b;
    };
    // Twenty-five digit references computed independently.
    const Ref refs[] = {
        {"emt12_a2b_c3", 12, 0.7902153116275831, 0.4195693767448338, 2.0 / 3,
         0.4568819782942498, 0.3367367276101427, 0.2495057244286851},
        {"emt16_a2b_bcd2", 16, 0.7898867562079593, 0.4202264875840814, 0.5, 0.5398867562079593,
         0.3362418504338695, 0.1052570066302438},
        {"emt16_bd2_a2c2", 16, 0.5664047549483442, 0.5, 0.4335952450516558, 0.75,
         0.3292451827646667, 0.1158699175282298},
        {"f16_bc2_a2d2", 16, 0.5906941663160846, 0.5, 0.75, 0.4093058336839154, 0.25,
         0.3488857201102116},
        {"octa24_b3", 24, 0.4322221997677043, 2.0 / 3, 0.5677778002322957, 0.5,
         0.2011445728500173, 0.2988554271499827},
    };
    for (const Ref& r : refs) {
        CAPTURE(r.name);
        Quadrilateral q = sporadic_quad(r.name);
        CHECK_NEAR(q.alpha, r.alpha, 5e-15);
        CHECK_NEAR(q.beta, r.beta, 5e-15);
        CHECK_NEAR(q.gamma, r.gamma, 5e-15);
        CHECK_NEAR(q.delta, r.delta, 5e-15);
        CHECK_NEAR(q.a, r.a, 5e-15);
        CHECK_NEAR(q.b, r.b, 5e-15);
        QuadReport rep = check_quad(q, r.f);
        CHECK(rep.ok);
    }
    // Two exact coincidences special to these tiles.
    CHECK(sporadic_quad("f16_bc2_a2d2").a == 0.25);
    Quadrilateral oq = sporadic_quad("octa24_b3");
    CHECK(oq.b == 0.5 - oq.a);
}

TEST_CASE("every isolated tiling passes validation with its quadrilateral") {
    for (const std::string& name : sporadic_names()) {
        CAPTURE(name);
        ValidationReport rep = validate(sporadic_tiling(name), sporadic_quad(name));
        CHECK(rep.ok);
    }
}

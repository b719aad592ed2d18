// Two-parameter family implementation: closed-form angles and edges with
// branch resolution, the moduli curve, b-minimization, flip admissibility
// and the quadrilateral predicates.

#include "a3b/family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "a3b/errors.hpp"
#include "a3b/trig.hpp"

namespace a3b {

namespace {

void require_even_f(int f, int least) {
    if (f < least || f % 2 != 0)
        throw domain_error("f must be an even integer >= " + std::to_string(least) +
                           ", got " + std::to_string(f));
}

// Worst inconsistency of a candidate angle/edge assignment: the spherical
// cosine rule for the diagonal of the gamma corner cross-checked against
// cos(pi*alpha), plus the better of the two closure residuals.
double candidate_score(double alpha, double beta, double gamma, double delta, double a, double b) {
    // Spherical cosine rule across the diagonal at the gamma corner:
    // cos(pi alpha) = (cos(2 pi / f) - cos(pi a/2) cos(pi b/2)) / (sin(pi a/2) sin(pi b/2)),
    // where 2 pi / f = pi gamma / 2.
    double cg = cospi(gamma / 2);
    double cross_cos_alpha = (cg - cospi(a / 2) * cospi(b / 2)) / (sinpi(a / 2) * sinpi(b / 2));
    auto [rd, rs] = closure_residuals(alpha, beta, gamma, delta);
    return std::max(std::fabs(cospi(alpha) - cross_cos_alpha),
                    std::min(std::fabs(rd), std::fabs(rs)));
}

Quadrilateral emt_quad_impl(int f, double beta, bool allow_rhombus) {
    require_even_f(f, 6);
    BetaRange r = beta_range(f);
    if (!(beta > r.lo && beta < r.hi))
        throw domain_error("beta outside the admissible open interval");
    if (std::fabs(beta - r.excluded) < 1e-12 && !allow_rhombus) {
        if (f == 6)
            throw degeneracy_error("beta = gamma = 2/3 degenerates the family at f = 6");
        throw degeneracy_error("beta = 1 - 2/f gives the rhombus reduction a = b");
    }

    double gamma = 4.0 / f;
    double cb = cospi(beta);
    double cos_a = -cb / (1.0 - cb);
    double a = std::acos(cos_a) / pi;
    double b0 = std::acos(std::clamp(cos_b_from_angles(a, beta, gamma), -1.0, 1.0)) / pi;

    // Principal alpha from the closed-form tangent, then resolve the branch
    // of alpha (+0 or +1) and of b (arccos ambiguity b vs 2-b, the latter
    // occurring for f = 6 with beta >= 4/3) jointly by consistency score.
    double g2 = 2 * pi / f, g4 = 4 * pi / f;
    double sb = sinpi(beta);
    double num = cb * ((cb - 1) * std::sin(g4) + 2 * sb * std::sin(g2) * std::sin(g2));
    double den = (std::sin(g4) * sb - 1) * (cb - 1) - 2 * cb * cb * std::sin(g2) * std::sin(g2);
    double a0 = std::atan2(num, den) / pi;
    a0 -= std::floor(a0); // principal value in [0, 1)
    // At f = 6, beta = 2/3 the tangent form is 0/0 (the tile is the
    // equilateral one with four angles 2/3); substitute the limit value.
    if (f == 6 && std::fabs(beta - 2.0 / 3.0) <= 1e-7) a0 = 2.0 / 3.0;

    std::array<Quadrilateral, 4> candidates;
    std::array<double, 4> scores;
    int n = 0;
    for (double alpha : {a0, a0 + 1.0}) {
        double delta = 2.0 - alpha - beta;
        for (double b : {b0, 2.0 - b0}) {
            candidates[n] = Quadrilateral{alpha, beta, gamma, delta, a, b, std::nullopt};
            scores[n] = candidate_score(alpha, beta, gamma, delta, a, b);
            ++n;
        }
    }
    int best_i = 0;
    for (int i = 1; i < 4; ++i)
        if (scores[i] < scores[best_i]) best_i = i;
    double best_score = scores[best_i];
    double second_score = scores[best_i == 0 ? 1 : 0];
    for (int i = 0; i < 4; ++i)
        if (i != best_i && scores[i] < second_score) second_score = scores[i];
    Quadrilateral best = candidates[best_i];
    // Accept an outright consistent branch, or -- near the ends of the
    // parameter interval, where the diagonal cross-check loses digits as an
    // edge collapses -- a branch that beats every rival by three orders of
    // magnitude while staying plausible in absolute terms.
    bool decisive = best_score <= 1e-3 && second_score >= 1e3 * best_score;
    if (best_score > 1e-8 && !decisive)
        throw numeric_error("no consistent angle/edge branch found for this (f, beta)");

    // Exact forms over the parameters A = alpha, B = beta:
    // alpha = A, beta = B, gamma = 4/f, delta = 2 - A - B.
    best.exact = std::array<AffineAngle, 4>{
        AffineAngle{Rational(0), Rational(1), Rational(0)},
        AffineAngle{Rational(0), Rational(0), Rational(1)},
        AffineAngle{Rational(4, f), Rational(0), Rational(0)},
        AffineAngle{Rational(2), Rational(-1), Rational(-1)},
    };
    return best;
}

} // namespace

BetaRange beta_range(int f) {
    require_even_f(f, 6);
    if (f == 6) return {1.0 / 3.0, 1.5, 2.0 / 3.0};
    return {0.5, 1.5, 1.0 - 2.0 / f};
}

Quadrilateral emt_quad(int f, double beta) { return emt_quad_impl(f, beta, false); }

Quadrilateral emt_quad_allow_rhombus(int f, double beta) { return emt_quad_impl(f, beta, true); }

std::pair<double, double> moduli_t_range(int f) {
    require_even_f(f, 6);
    return {-0.25, f == 6 ? 1.0 / 3.0 : 0.25};
}

Quadrilateral moduli_point_quad(const ModuliPoint& p) {
    auto [lo, hi] = moduli_t_range(p.f);
    if (!(p.t > lo && p.t < hi))
        throw domain_error("moduli parameter t outside the open curve interval");
    return emt_quad_allow_rhombus(p.f, 1.0 - 2.0 * p.t);
}

BMinResult b_min(int f) {
    require_even_f(f, 6);
    BetaRange r = beta_range(f);
    double margin = 1e-7 * (r.hi - r.lo);
    double lo = r.lo + margin, hi = r.hi - margin;
    auto b_of = [f](double beta) { return emt_quad_allow_rhombus(f, beta).b; };

    const int N = 2000;
    int best_i = 0;
    double best_v = b_of(lo);
    for (int i = 1; i <= N; ++i) {
        double x = lo + (hi - lo) * i / N;
        double v = b_of(x);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    double wa = lo + (hi - lo) * std::max(0, best_i - 1) / N;
    double wb = lo + (hi - lo) * std::min(N, best_i + 1) / N;
    // Golden-section refinement to ~1e-12 in beta.
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double c = wb - gr * (wb - wa), d = wa + gr * (wb - wa);
    double fc = b_of(c), fd = b_of(d);
    while (wb - wa > 1e-12) {
        if (fc < fd) {
            wb = d;
            d = c;
            fd = fc;
            c = wb - gr * (wb - wa);
            fc = b_of(c);
        } else {
            wa = c;
            c = d;
            fc = fd;
            d = wa + gr * (wb - wa);
            fd = b_of(d);
        }
    }
    double beta = (wa + wb) / 2;
    return {b_of(beta), beta};
}

FlipCase flip_case_for_m(int f, int m) {
    require_even_f(f, 6);
    if (f < 8) throw domain_error("flips require f >= 8");
    if (!(8 * m > f && 8 * m < 3 * f))
        throw domain_error("flip parameter m must satisfy f/8 < m < 3f/8");
    FlipCase c;
    c.f = f;
    c.m = m;
    c.l = std::min(m, f / 2 - m);
    c.n_max = std::min(3, (f / 2) / c.l);
    c.flavor = (4 * m <= f) ? FlipFlavor::L2 : FlipFlavor::L1;
    c.beta = 2.0 - 4.0 * m / f;
    if (6 * m <= f) c.range_case = 1;
    else if (4 * m < f) c.range_case = 2;
    else if (4 * m == f) c.range_case = 3;
    else if (3 * m < f) c.range_case = 4;
    else c.range_case = 5;
    if (4 * m == f) c.degeneracy = FlipDegeneracy::beta_eq_1_triangle;
    else if (4 * m == f + 4) c.degeneracy = FlipDegeneracy::delta_eq_1_triangle;
    else if (4 * m == f + 2) c.degeneracy = FlipDegeneracy::rhombus_a4;
    else c.degeneracy = FlipDegeneracy::none;
    return c;
}

std::optional<FlipCase> flip_admissible(int f, double beta) {
    require_even_f(f, 6);
    if (f < 8) return std::nullopt;
    double m_real = (2.0 - beta) * f / 4.0;
    double m_round = std::round(m_real);
    if (std::fabs(m_real - m_round) > 1e-9 * f) return std::nullopt;
    int m = static_cast<int>(m_round);
    if (!(8 * m > f && 8 * m < 3 * f)) return std::nullopt;
    return flip_case_for_m(f, m);
}

std::vector<FlipCase> flip_cases(int f) {
    require_even_f(f, 6);
    std::vector<FlipCase> out;
    if (f < 8) return out;
    for (int m = f / 8 + 1; 8 * m < 3 * f; ++m)
        out.push_back(flip_case_for_m(f, m));
    return out;
}

QuadPredicates quad_predicates(const Quadrilateral& q, double tol) {
    QuadPredicates p{};
    auto lt = [tol](double x, double y) { return x < y - tol; };
    auto gt = [tol](double x, double y) { return x > y + tol; };
    auto eq = [tol](double x, double y) { return std::fabs(x - y) <= tol; };

    // (beta < gamma) iff (alpha > delta); ties line up with ties.
    if (eq(q.beta, q.gamma) || eq(q.alpha, q.delta))
        p.order_beta_gamma_alpha_delta = eq(q.beta, q.gamma) && eq(q.alpha, q.delta);
    else
        p.order_beta_gamma_alpha_delta = lt(q.beta, q.gamma) == gt(q.alpha, q.delta);

    p.straight_alpha = eq(q.beta, q.delta) == eq(q.alpha, 1.0);

    bool all_convex = q.alpha < 1 + tol && q.beta < 1 + tol && q.gamma < 1 + tol && q.delta < 1 + tol;
    if (all_convex && !eq(q.beta, q.delta) && !eq(q.alpha, q.gamma))
        p.convex_order = (gt(q.beta, q.delta) == lt(q.alpha, q.gamma)) &&
                         (lt(q.beta, q.delta) == gt(q.alpha, q.gamma));
    else
        p.convex_order = true; // not applicable

    p.angle_lower_bounds = q.delta > 1 + tol ||
                           (gt(2 * q.alpha + q.beta, 1.0) && gt(q.beta + 2 * q.gamma, 1.0));

    int straight = 0;
    for (double v : {q.alpha, q.beta, q.gamma, q.delta})
        if (v >= 1 - tol) ++straight;
    p.at_most_one_straight = straight <= 1;

    if (all_convex)
        p.convex_relations = lt(q.alpha + q.delta, 1 + q.beta) && lt(q.alpha + q.delta, 1 + q.gamma) &&
                             lt(q.alpha + q.beta, 1 + q.delta) && lt(q.gamma + q.delta, 1 + q.alpha);
    else
        p.convex_relations = true; // not applicable

    p.all_ok = p.order_beta_gamma_alpha_delta && p.straight_alpha && p.convex_order &&
               p.angle_lower_bounds && p.at_most_one_straight && p.convex_relations;
    return p;
}

} // namespace a3b

// Trigonometric kernel implementation.

#include "a3b/trig.hpp"

#include <cmath>

#include "a3b/errors.hpp"

namespace a3b {

double sinpi(double x) {
    double r = std::remainder(x, 2.0); // r in [-1, 1], sin has period 2 in pi units
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(pi * r); // r = 0 exactly at integer x
}

double cospi(double x) {
    double r = std::fabs(std::remainder(x, 2.0)); // cos is even with period 2
    if (r <= 0.25) return std::cos(pi * r);
    if (r < 0.75) return std::sin(pi * (0.5 - r)); // exact zero at r = 1/2
    return -std::cos(pi * (1.0 - r));              // exact -1 at r = 1
}

double angle_sum_residual(const Quadrilateral& q, int f) {
    if (f <= 0) throw domain_error("angle_sum_residual: f must be positive");
    return q.alpha + q.beta + q.gamma + q.delta - (2.0 + 4.0 / f);
}

double cos_b_from_angles(double a, double beta, double gamma) {
    double ca = cospi(a);
    double cb = cospi(beta), cc = cospi(gamma);
    double sb = sinpi(beta), sc = sinpi(gamma);
    return ca * ca * ca * (1 - cb) * (1 - cc) - ca * ca * sb * sc
           + ca * (cb + cc - cb * cc) + sb * sc;
}

std::pair<double, double> cos_a_two_ways(const Quadrilateral& q) {
    double sa = sinpi(q.alpha), sd = sinpi(q.delta);
    if (std::fabs(sa) < 1e-9 || std::fabs(sd) < 1e-9)
        throw singular_error("cos_a_two_ways: singular at a straight corner (alpha or delta = 1)");
    double h_g = sinpi(q.gamma / 2), h_b = sinpi(q.beta / 2);
    double e1 = (sa + cospi(q.delta) * sinpi(q.gamma)) / (2 * sd * h_g * h_g);
    double e2 = (sd + cospi(q.alpha) * sinpi(q.beta)) / (2 * sa * h_b * h_b);
    return {e1, e2};
}

std::pair<double, double> closure_residuals(double alpha, double beta, double gamma, double delta) {
    double hb = sinpi(beta / 2), hg = sinpi(gamma / 2);
    double r_diff = sinpi(alpha - gamma / 2) * hb - hg * sinpi(delta - beta / 2);
    double r_sum = sinpi(alpha + gamma / 2) * hb + hg * sinpi(delta + beta / 2);
    return {r_diff, r_sum};
}

std::pair<double, double> closure_residuals(const Quadrilateral& q) {
    return closure_residuals(q.alpha, q.beta, q.gamma, q.delta);
}

QuadReport check_quad(const Quadrilateral& q, int f, double trig_tol, double linear_tol) {
    QuadReport rep;
    auto open02 = [](double v) { return v > 0.0 && v < 2.0; };
    rep.in_range = open02(q.alpha) && open02(q.beta) && open02(q.gamma) && open02(q.delta) &&
                   open02(q.a) && open02(q.b);
    rep.angle_sum_residual = angle_sum_residual(q, f);
    auto [rd, rs] = closure_residuals(q);
    rep.r_diff = rd;
    rep.r_sum = rs;
    rep.cos_b_residual = cospi(q.b) - cos_b_from_angles(q.a, q.beta, q.gamma);
    try {
        auto [e1, e2] = cos_a_two_ways(q);
        double ca = cospi(q.a);
        rep.cos_a_residual = std::max(std::fabs(e1 - ca), std::fabs(e2 - ca));
    } catch (const singular_error&) {
        rep.cos_a_singular = true;
        rep.cos_a_residual = 0.0;
    }
    rep.ok = rep.in_range && std::fabs(rep.angle_sum_residual) <= linear_tol &&
             std::min(std::fabs(rep.r_diff), std::fabs(rep.r_sum)) <= trig_tol &&
             std::fabs(rep.cos_b_residual) <= trig_tol && rep.cos_a_residual <= trig_tol;
    return rep;
}

} // namespace a3b

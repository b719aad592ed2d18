#pragma once

// Trigonometric kernel: pi-unit sine/cosine with exact special values,
// the closed-form edge-length relations of the a^3 b quadrilateral, the two
// closure residuals, and the combined consistency check used throughout the
// library and the CLI.

#include <utility>

#include "a3b/quad.hpp"

namespace a3b {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// sin(pi*x) and cos(pi*x) with argument reduction, exact at integer and
// half-integer x.  Exactness at those points matters: several formulas
// divide by sin(pi*alpha) or sin(pi*delta), and the guard for the straight
// corner delta = 1 must trigger exactly.
double sinpi(double x);
double cospi(double x);

// Sum of the four interior angles minus the value 2 + 4/f it must take on a
// sphere tiled by f congruent tiles (Gauss-Bonnet: each tile has excess
// 4*pi/f).
double angle_sum_residual(const Quadrilateral& q, int f);

// cos(pi*b) expressed through the a-edge and the angles beta and gamma.
double cos_b_from_angles(double a, double beta, double gamma);

// The two independent closed forms for cos(pi*a) in terms of the angles.
// Requires alpha != 1 and delta != 1; throws singular_error when either
// sin(pi*alpha) or sin(pi*delta) is smaller than 1e-9 in magnitude.
std::pair<double, double> cos_a_two_ways(const Quadrilateral& q);

// The two closure residuals of the quadrilateral:
//   r_diff = sin(pi(alpha - gamma/2)) sin(pi beta/2) - sin(pi gamma/2) sin(pi(delta - beta/2))
//   r_sum  = sin(pi(alpha + gamma/2)) sin(pi beta/2) + sin(pi gamma/2) sin(pi(delta + beta/2))
// A valid quadrilateral zeroes at least one of them.  On the symmetric
// slice alpha = gamma, beta = delta the first vanishes identically.
std::pair<double, double> closure_residuals(double alpha, double beta, double gamma, double delta);
std::pair<double, double> closure_residuals(const Quadrilateral& q);

struct QuadReport {
    bool in_range = false;         // all angles and edges inside (0, 2)
    double angle_sum_residual = 0; // vs 2 + 4/f
    double r_diff = 0, r_sum = 0;  // closure residuals
    double cos_b_residual = 0;     // cos(pi b) vs cos_b_from_angles
    double cos_a_residual = 0;     // worst of the two cos a forms vs cos(pi a)
    bool cos_a_singular = false;   // alpha or delta at a straight corner; cos a check skipped
    bool ok = false;
};

// Full consistency report: ranges, angle sum (linear tolerance), closure
// residuals and edge-length relations (trigonometric tolerance).
QuadReport check_quad(const Quadrilateral& q, int f, double trig_tol = 1e-10,
                      double linear_tol = 1e-12);

} // namespace a3b

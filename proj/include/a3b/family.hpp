#pragma once

// The two-parameter family of a^3 b quadrilaterals that tile the sphere with
// one tile per face of an f-faced earth-map layout: gamma = 4/f, beta free
// in an open interval, alpha and delta determined.  Also: the moduli-curve
// parametrization, the minimum of the b-edge over the family, the admissible
// flip parameters, and the convexity/ordering predicates every valid
// quadrilateral must satisfy.

#include <optional>
#include <utility>
#include <vector>

#include "a3b/quad.hpp"

namespace a3b {

// Open interval of admissible beta at face count f, with the single excluded
// interior point (where the quadrilateral degenerates to a rhombus a = b;
// for f = 6 the same point is beta = gamma = 2/3).
struct BetaRange {
    double lo, hi;
    double excluded;
};
BetaRange beta_range(int f); // throws domain_error unless f is even and >= 6

// The family member at (f, beta).  Throws domain_error for beta outside the
// open interval and degeneracy_error at the excluded point.
Quadrilateral emt_quad(int f, double beta);

// As emt_quad but keeps the excluded rhombus point (a = b) admissible.
// Used by mesh construction, by the moduli curve, and by scans that need
// the family to be continuous across that point.
Quadrilateral emt_quad_allow_rhombus(int f, double beta);

// Point on the moduli curve cos(pi t) = 1 / (2 sin(pi a / 2)), equivalently
// beta = 1 - 2t.  t = 1/f is the rhombus point a = b; t = 0 is beta = 1.
struct ModuliPoint {
    int f;
    double t;
};
// Open t-interval of the curve: (-1/4, 1/3) for f = 6, (-1/4, 1/4) for f >= 8.
std::pair<double, double> moduli_t_range(int f);
// The quadrilateral at a moduli point (the rhombus point is admissible).
Quadrilateral moduli_point_quad(const ModuliPoint& p);

// Minimum of the b-edge over the beta interval.  For f = 6 and f >= 10 the
// minimum is attained at an interior beta; for f = 8 the infimum 0 sits at
// the lower endpoint and the returned pair reflects the near-boundary value.
struct BMinResult {
    double b;
    double beta;
};
BMinResult b_min(int f);

// Admissible flip parameters.  A flip splits the tiling along m gamma-fans:
// the angles satisfy alpha + delta = m * gamma and beta = (f/2 - m) * gamma,
// i.e. beta = 2 - 4m/f.  Admissible integer m lie strictly between f/8 and
// 3f/8 (equivalently beta inside its interval), and flips exist only for
// f >= 8.
enum class FlipFlavor { L1, L2 }; // L2 when m <= f/4 (beta >= 1), L1 otherwise
enum class FlipDegeneracy {
    none,
    beta_eq_1_triangle,  // m = f/4: beta = 1, the beta corner is straight
    delta_eq_1_triangle, // m = (f+4)/4: delta = 1, the delta corner is straight
    rhombus_a4,          // m = (f+2)/4: a = b, the tile degenerates to a rhombus
};
struct FlipCase {
    int f = 0;
    int m = 0;
    int l = 0;          // block half-length: min(m, f/2 - m)
    int n_max = 0;      // largest number of simultaneous flips (1..3)
    int range_case = 0; // 1..5, the five admissible m-ranges in increasing m
    FlipFlavor flavor = FlipFlavor::L1;
    FlipDegeneracy degeneracy = FlipDegeneracy::none;
    double beta = 0; // 2 - 4m/f
};
// The flip case whose pinned beta matches the given one (within 1e-9), if
// that m is admissible.  Returns nullopt for f = 6 (no flips) and for beta
// values not of the pinned form.  Throws domain_error for odd f or f < 6.
std::optional<FlipCase> flip_admissible(int f, double beta);
// All admissible flip cases at face count f, ascending in m.
std::vector<FlipCase> flip_cases(int f);
// The flip case for one specific admissible m; domain_error if inadmissible.
FlipCase flip_case_for_m(int f, int m);

// Ordering, straight-corner and convexity predicates satisfied by every
// simple a^3 b quadrilateral; all comparisons use the given tolerance.
struct QuadPredicates {
    bool order_beta_gamma_alpha_delta; // (beta < gamma) iff (alpha > delta)
    bool straight_alpha;               // (beta = delta) iff (alpha = 1)
    bool convex_order;                 // all angles < 1: (beta > delta) iff (alpha < gamma), and reversed
    bool angle_lower_bounds;           // delta <= 1: 2 alpha + beta > 1 and beta + 2 gamma > 1
    bool at_most_one_straight;         // at most one angle >= 1 (two would forbid any tiling)
    bool convex_relations;             // all angles < 1: each angle pair sum < 1 + another
    bool all_ok;
};
QuadPredicates quad_predicates(const Quadrilateral& q, double tol = 1e-12);

} // namespace a3b

#pragma once

// Constructors and enumerators for the known a^3 b tilings: the earth-map
// tiling with two polar caps of gamma-fans, its flip modifications, the
// counting table of distinct quadrilaterals and tilings per face number,
// and the five isolated tilings outside the continuous families.

#include <string>
#include <vector>

#include "a3b/family.hpp"
#include "a3b/tiling.hpp"

namespace a3b {

// The earth-map tiling: f tiles in f/2 zones between two poles, every zone
// holding one north and one south tile; all tiles share one handedness.
Tiling build_emt(int f);

// A choice of simultaneous flips: n = gaps.size() blocks (1 <= n <= 3) of
// 2l consecutive tiles each get reflected, separated by gaps[i] untouched
// zones; the gaps must sum to f/2 - n*l.  Gap lists are kept as sorted
// multisets -- for n <= 3 every cyclic arrangement of the same multiset
// yields the same tiling up to symmetry.
struct FlipSpec {
    int f = 0;
    int m = 0;
    std::vector<int> gaps;
};
Tiling apply_flips(const FlipSpec& spec);

// All distinct flip choices at (f, m): n ascending, then gap multisets in
// lexicographic order.
std::vector<FlipSpec> enumerate_flip_tilings(int f, int m);

// Closed-form count of distinct flip choices with exactly n blocks; throws
// domain_error when n exceeds the admissible maximum for this case.
long long count_flip_tilings(int f, int m, int n);

// The family quadrilateral at beta = 2 - 4m/f with exact rational angle
// data attached, so vertex angle sums around flipped tilings check out
// symbolically.  The rhombus parameter 4m = f + 2 is allowed here.
Quadrilateral flip_quad(int f, int m);

// Number of distinct flip-admissible quadrilaterals at face count f (the
// rhombus-degenerate parameter, whose tilings belong to the four-equal-edge
// family, is excluded).  Requires f >= 8.
int q1(int f);

// The triple (Q1, Q2, Q3): Q1 flip-admissible quadrilaterals as above, of
// which Q2 admit a second, shorter flip decomposition and Q3 = Q1 - Q2 do
// not.  Requires f >= 8.
struct QTable {
    int q1, q2, q3;
};
QTable q_table(int f);

// Three-layer earth-map tiling with f = 4k tiles: two k-fans of gamma at
// the poles and an equatorial band of 2k tile pairs.  Valid combinatorially
// for every k >= 3; admits a congruent quadrilateral only for k = 3, 4.
Tiling three_layer_emt(int k);

// The five isolated tilings: name -> (tiling, quadrilateral).
//   emt12_a2b_c3    f = 12, three-layer, vertices 6 a2b + 2 c3 + 6 bcd2
//   emt16_a2b_bcd2  f = 16, three-layer, vertices 8 a2b + 8 bcd2 + 2 c4
//   emt16_bd2_a2c2  f = 16, four-column band, vertices 8 bd2 + 8 a2c2 + 2 b4
//   f16_bc2_a2d2    f = 16, vertices 8 bc2 + 6 a2d2 + 4 ab2d
//   octa24_b3       f = 24, octahedral, vertices 8 b3 + 12 a2c2 + 6 d4
std::vector<std::string> sporadic_names();
Tiling sporadic_tiling(const std::string& name);
Quadrilateral sporadic_quad(const std::string& name);

} // namespace a3b

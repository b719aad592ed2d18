// Generator implementation: earth-map tilings, flip modifications with
// closed-form counting, the per-f counting table, and the five isolated
// tilings.

#include "a3b/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "a3b/errors.hpp"
#include "a3b/trig.hpp"

namespace a3b {

Tiling build_emt(int f) {
    if (f < 6 || f % 2 != 0)
        throw domain_error("build_emt: f must be an even integer >= 6");
    const int Z = f / 2;
    const int PN = 0, PS = 1;
    auto U = [Z](int z) { return 2 + ((z % Z) + Z) % Z; };
    auto L = [Z](int z) { return 2 + Z + ((z % Z) + Z) % Z; };
    std::vector<std::array<int, 4>> corners;
    corners.reserve(f);
    for (int z = 0; z < Z; ++z) {
        corners.push_back({L(z), U(z - 1), PN, U(z)});     // north tile of zone z
        corners.push_back({U(z), L(z + 1), PS, L(z)});     // south tile of zone z
    }
    return Tiling::from_corners(f, corners);
}

Tiling apply_flips(const FlipSpec& spec) {
    FlipCase fc = flip_case_for_m(spec.f, spec.m); // validates f and m
    const int n = static_cast<int>(spec.gaps.size());
    if (n < 1 || n > 3)
        throw domain_error("apply_flips: between 1 and 3 blocks are possible");
    std::vector<int> gaps = spec.gaps;
    std::sort(gaps.begin(), gaps.end());
    if (gaps.front() < 0) throw domain_error("apply_flips: gaps must be nonnegative");
    const int l = fc.l;
    const long long G = spec.f / 2 - static_cast<long long>(n) * l;
    if (G < 0)
        throw domain_error("apply_flips: " + std::to_string(n) +
                           " blocks of half-length " + std::to_string(l) +
                           " do not fit into " + std::to_string(spec.f / 2) + " zones");
    long long sum = std::accumulate(gaps.begin(), gaps.end(), 0LL);
    if (sum != G)
        throw domain_error("apply_flips: gaps sum to " + std::to_string(sum) +
                           ", expected f/2 - n*l = " + std::to_string(G));

    const int PN = 0, PS = 1;
    int next_id = 2;
    auto alloc_col = [&next_id]() {
        std::pair<int, int> col{next_id, next_id + 1}; // (upper, lower)
        next_id += 2;
        return col;
    };

    // The cyclic band: n reflected blocks separated by runs of untouched
    // zones.  Each segment consumes a west vertex column (x upper, y lower)
    // and produces an east column; the last east column wraps around.
    enum SegKind { block, zone };
    std::vector<SegKind> segments;
    for (int i = 0; i < n; ++i) {
        segments.push_back(block);
        for (int g = 0; g < gaps[i]; ++g) segments.push_back(zone);
    }

    std::vector<std::array<int, 4>> corners;
    corners.reserve(spec.f);
    const auto first_west = alloc_col();
    auto west = first_west;
    for (size_t si = 0; si < segments.size(); ++si) {
        const auto east = (si + 1 == segments.size()) ? first_west : alloc_col();
        const int x = west.first, y = west.second;   // west column
        const int xe = east.first, ye = east.second; // east column
        if (segments[si] == zone) {
            corners.push_back({y, x, PN, xe});  // north tile
            corners.push_back({xe, ye, PS, y}); // south tile
        } else {
            // A reflected block: l mirror tile pairs G_j, H_j strung along a
            // chain of interior vertices; the chain ends alias onto the
            // poles and the flanking columns, differently per flavor.
            std::vector<int> interior(2 * l - 2);
            for (auto& v : interior) v = next_id++;
            auto I = [&](int k) -> int {
                if (fc.flavor == FlipFlavor::L1) {
                    if (k == -2) return PN;
                    if (k == -1) return xe;
                    if (k == 2 * l - 2) return y;
                    if (k == 2 * l - 1) return PS;
                } else {
                    if (k == -2) return x;
                    if (k == -1) return PN;
                    if (k == 2 * l - 2) return PS;
                    if (k == 2 * l - 1) return ye;
                }
                return interior[k];
            };
            const int gamma_G = fc.flavor == FlipFlavor::L1 ? x : y;
            const int gamma_H = fc.flavor == FlipFlavor::L1 ? ye : xe;
            for (int j = 0; j < l; ++j) {
                corners.push_back({I(2 * j - 1), I(2 * j - 2), gamma_G, I(2 * j)});
                corners.push_back({I(2 * j), I(2 * j + 1), gamma_H, I(2 * j - 1)});
            }
        }
        west = east;
    }
    return Tiling::from_corners(spec.f, corners);
}

std::vector<FlipSpec> enumerate_flip_tilings(int f, int m) {
    FlipCase fc = flip_case_for_m(f, m);
    std::vector<FlipSpec> out;
    for (int n = 1; n <= fc.n_max; ++n) {
        int G = f / 2 - n * fc.l;
        if (n == 1) {
            out.push_back({f, m, {G}});
        } else if (n == 2) {
            for (int i = 0; i <= G / 2; ++i) out.push_back({f, m, {i, G - i}});
        } else {
            for (int i = 0; i <= G / 3; ++i)
                for (int j = i; j <= (G - i) / 2; ++j) out.push_back({f, m, {i, j, G - i - j}});
        }
    }
    return out;
}

long long count_flip_tilings(int f, int m, int n) {
    FlipCase fc = flip_case_for_m(f, m);
    if (n < 1 || n > fc.n_max)
        throw domain_error("count_flip_tilings: n must lie in 1.." + std::to_string(fc.n_max) +
                           " for this case");
    const long long G = f / 2 - static_cast<long long>(n) * fc.l;
    long long count;
    if (n == 1) count = 1;
    else if (n == 2) count = G / 2 + 1;
    else count = ((G + 3) * (G + 3) + 6) / 12; // nearest integer to (G+3)^2/12

    // Cross-check against the per-case closed forms; these are equivalent
    // to the unified gap-count formulas above for every admissible (f, m).
    long long printed = count;
    if (n == 2) {
        printed = (fc.flavor == FlipFlavor::L2) ? (f - 4 * m + 4) / 4 : (4 * m - f + 4) / 4;
    } else if (n == 3) {
        if (fc.range_case == 1) {
            long long d = f - 6 * m;
            printed = (d + 4) / 4 + (d * d + 24) / 48;
        } else { // range_case 5
            long long d = 3 * m - f;
            printed = (d + 2) / 2 + (d * d + 6) / 12;
        }
    }
    if (printed != count)
        throw std::logic_error("count_flip_tilings: closed forms disagree at f=" +
                               std::to_string(f) + " m=" + std::to_string(m) +
                               " n=" + std::to_string(n));
    return count;
}

Quadrilateral flip_quad(int f, int m) {
    flip_case_for_m(f, m); // validate admissibility
    Rational beta(2 * f - 4 * m, f);
    Quadrilateral q = emt_quad_allow_rhombus(f, beta.value());
    // The generic family treats beta as an opaque parameter; here beta is
    // rational, so replace the exact forms with constants over alpha alone.
    q.exact = {AffineAngle{Rational(0), Rational(1), Rational(0)},
               AffineAngle{beta, Rational(0), Rational(0)},
               AffineAngle{Rational(4, f), Rational(0), Rational(0)},
               AffineAngle{Rational(2) - beta, Rational(-1), Rational(0)}};
    return q;
}

int q1(int f) {
    if (f < 8 || f % 2 != 0)
        throw domain_error("q1: f must be an even integer >= 8");
    int count = 0;
    for (int m = f / 8 + 1; 8 * m < 3 * f; ++m)
        if (4 * m != f + 2) ++count; // skip the rhombus-degenerate parameter
    int closed = 2 * ((f - 4) / 8) + 1;
    if (count != closed)
        throw std::logic_error("q1: count and closed form disagree at f=" + std::to_string(f));
    return count;
}

QTable q_table(int f) {
    int v1 = q1(f); // validates f
    static const int by_residue[12] = {
        // f mod 24: 0   2   4   6   8   10  12  14  16  18  20  22
        1, 1, 2, 0, 2, 1, 1, 1, 2, 0, 2, 1};
    int v2 = by_residue[(f % 24) / 2];
    if (f == 8) v2 = 0;
    if (f == 18) v2 = 1;
    return {v1, v2, v1 - v2};
}

Tiling three_layer_emt(int k) {
    if (k < 3) throw domain_error("three_layer_emt: k must be >= 3");
    const int PN = 0, PS = 1;
    auto A = [k](int c) { return 2 + 4 * (((c % k) + k) % k); };
    auto B = [k](int c) { return 3 + 4 * (((c % k) + k) % k); };
    auto C = [k](int c) { return 4 + 4 * (((c % k) + k) % k); };
    auto D = [k](int c) { return 5 + 4 * (((c % k) + k) % k); };
    std::vector<std::array<int, 4>> corners;
    corners.reserve(4 * k);
    for (int c = 0; c < k; ++c) {
        corners.push_back({A(c), B(c), PN, B(c - 1)});
        corners.push_back({A(c), C(c), D(c - 1), B(c - 1)});
        corners.push_back({C(c), A(c), B(c), D(c)});
        corners.push_back({C(c), D(c - 1), PS, D(c)});
    }
    return Tiling::from_corners(4 * k, corners);
}

namespace {

Tiling band_tiling_16() {
    // Four-column band: two poles of four beta corners each, columns of
    // vertices W (alpha^2 gamma^2), X (beta delta^2), Y (alpha^2 gamma^2),
    // Z (beta delta^2).
    const int PN = 0, PS = 1;
    auto W = [](int c) { return 2 + 4 * (((c % 4) + 4) % 4); };
    auto X = [](int c) { return 3 + 4 * (((c % 4) + 4) % 4); };
    auto Y = [](int c) { return 4 + 4 * (((c % 4) + 4) % 4); };
    auto Z = [](int c) { return 5 + 4 * (((c % 4) + 4) % 4); };
    std::vector<std::array<int, 4>> corners;
    for (int c = 0; c < 4; ++c) {
        corners.push_back({W(c + 1), PN, W(c), X(c)});
        corners.push_back({Y(c), X(c), W(c), Z(c)});
        corners.push_back({W(c + 1), Z(c + 1), Y(c), X(c)});
        corners.push_back({Y(c + 1), PS, Y(c), Z(c + 1)});
    }
    return Tiling::from_corners(16, corners);
}

Tiling mixed_tiling_16() {
    // The sixteen-tile tiling with vertex types beta gamma^2, alpha^2
    // delta^2 and alpha beta^2 delta, written out literally over three
    // rings of six vertices.
    auto v1 = [](int k) { return ((k % 6) + 6) % 6; };
    auto v2 = [](int k) { return 6 + ((k % 6) + 6) % 6; };
    auto v3 = [](int k) { return 12 + ((k % 6) + 6) % 6; };
    std::vector<std::array<int, 4>> corners = {
        {v1(0), v1(1), v1(2), v1(3)}, {v1(3), v1(4), v1(5), v1(0)},
        {v2(0), v1(0), v1(1), v2(1)}, {v2(0), v1(0), v1(5), v2(5)},
        {v2(1), v3(1), v3(0), v2(0)}, {v2(5), v3(5), v3(0), v2(0)},
        {v2(2), v1(2), v1(1), v2(1)}, {v2(1), v3(1), v3(2), v2(2)},
        {v2(3), v1(3), v1(2), v2(2)}, {v2(2), v3(2), v3(3), v2(3)},
        {v2(3), v1(3), v1(4), v2(4)}, {v2(4), v3(4), v3(3), v2(3)},
        {v2(5), v1(5), v1(4), v2(4)}, {v2(4), v3(4), v3(5), v2(5)},
        {v3(1), v3(0), v3(5), v3(4)}, {v3(4), v3(3), v3(2), v3(1)},
    };
    return Tiling::from_corners(16, corners);
}

Tiling octahedral_tiling_24() {
    // Built over the octahedron: its six vertices take four delta corners
    // each, the eight face centers take three beta corners, and one point
    // on each of the twelve edges takes two alpha and two gamma corners.
    // Each edge carries one globally consistent direction (axis x to y, y
    // to z, z to x); around every face these directions form a cycle, so a
    // face corner has one incoming and one outgoing edge.
    auto vert = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    auto edge_point = [](int from_axis, int s_from, int s_to) {
        return 14 + 4 * from_axis + 2 * (s_from < 0 ? 1 : 0) + (s_to < 0 ? 1 : 0);
    };
    std::vector<std::array<int, 4>> corners;
    for (int bits = 0; bits < 8; ++bits) {
        const int face = 6 + bits;
        const int sign[3] = {(bits & 4) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 1) ? -1 : 1};
        for (int p = 0; p < 3; ++p) {
            int prev = (p + 2) % 3, next = (p + 1) % 3;
            int x_in = edge_point(prev, sign[prev], sign[p]);
            int x_out = edge_point(p, sign[p], sign[next]);
            corners.push_back({x_in, face, x_out, vert(p, sign[p])});
        }
    }
    return Tiling::from_corners(24, corners);
}

std::array<AffineAngle, 4> affine_over_alpha(Rational pb, Rational qb, Rational pg, Rational qg,
                                             Rational pd, Rational qd) {
    return {AffineAngle{Rational(0), Rational(1), Rational(0)},
            AffineAngle{pb, qb, Rational(0)},
            AffineAngle{pg, qg, Rational(0)},
            AffineAngle{pd, qd, Rational(0)}};
}

} // namespace

std::vector<std::string> sporadic_names() {
    return {"emt12_a2b_c3", "emt16_a2b_bcd2", "emt16_bd2_a2c2", "f16_bc2_a2d2", "octa24_b3"};
}

Tiling sporadic_tiling(const std::string& name) {
    if (name == "emt12_a2b_c3") return three_layer_emt(3);
    if (name == "emt16_a2b_bcd2") return three_layer_emt(4);
    if (name == "emt16_bd2_a2c2") return band_tiling_16();
    if (name == "f16_bc2_a2d2") return mixed_tiling_16();
    if (name == "octa24_b3") return octahedral_tiling_24();
    throw domain_error("unknown tiling name: " + name);
}

Quadrilateral sporadic_quad(const std::string& name) {
    Quadrilateral q;
    if (name == "emt12_a2b_c3") {
        q.alpha = 1 - std::asin(std::sqrt(6.0) / 4) / pi;
        q.beta = 2 - 2 * q.alpha;
        q.gamma = 2.0 / 3.0;
        q.delta = q.alpha - 1.0 / 3.0;
        q.a = std::acos((2 * std::sqrt(5.0) - 3) / 3) / pi;
        q.b = std::acos(3 * std::sqrt(5.0) - 6) / pi;
        q.exact = affine_over_alpha({2}, {-2}, {2, 3}, {0}, {-1, 3}, {1});
    } else if (name == "emt16_a2b_bcd2") {
        double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s10 = std::sqrt(10.0);
        q.alpha = 1 - std::asin(std::sqrt(3 * s10 - 3 * s5 - 3 * s2 + 15) / 6) / pi;
        q.beta = 2 - 2 * q.alpha;
        q.gamma = 0.5;
        q.delta = q.alpha - 0.25;
        q.a = std::acos((s10 + s5 - s2 - 3) / 2) / pi;
        q.b = std::acos(((27 * s5 - 43) * s2 + 23 * s5 - 27) /
                        ((196 * s5 - 420) * s2 - 267 * s5 + 623)) / pi;
        q.exact = affine_over_alpha({2}, {-2}, {1, 2}, {0}, {-1, 4}, {1});
    } else if (name == "emt16_bd2_a2c2") {
        double r = 2 * std::sqrt(2.0) + 1;
        q.alpha = 1 - std::asin(std::sqrt(r) / 2) / pi;
        q.beta = 0.5;
        q.gamma = 1 - q.alpha;
        q.delta = 0.75;
        q.a = std::acos(1 / std::sqrt(r)) / pi;
        q.b = std::acos(7 / (r * std::sqrt(r))) / pi;
        q.exact = affine_over_alpha({1, 2}, {0}, {1}, {-1}, {3, 4}, {0});
    } else if (name == "f16_bc2_a2d2") {
        q.alpha = 1 - std::asin(std::sqrt(10 + 4 * std::sqrt(2.0)) / std::sqrt(17.0)) / pi;
        q.beta = 0.5;
        q.gamma = 0.75;
        q.delta = 1 - q.alpha;
        q.a = 0.25;
        q.b = std::acos((2 * std::sqrt(2.0) - 1) / 4) / pi;
        q.exact = affine_over_alpha({1, 2}, {0}, {3, 4}, {0}, {1}, {-1});
    } else if (name == "octa24_b3") {
        double r = 4 + std::sqrt(3.0);
        q.alpha = std::asin(std::sqrt(r) / std::sqrt(6.0)) / pi;
        q.beta = 2.0 / 3.0;
        q.gamma = 1 - q.alpha;
        q.delta = 0.5;
        q.a = std::asin(std::sqrt(2.0) / std::sqrt(r)) / pi;
        q.b = 0.5 - q.a;
        q.exact = affine_over_alpha({2, 3}, {0}, {1}, {-1}, {1, 2}, {0});
    } else {
        throw domain_error("unknown tiling name: " + name);
    }
    return q;
}

} // namespace a3b

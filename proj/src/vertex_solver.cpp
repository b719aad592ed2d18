// Vertex arithmetic implementation: brute-force enumeration over bounded
// degrees, exact 4x4 integer determinants, and a depth-first search for
// vertex multiplicities.

#include "a3b/vertex_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "a3b/errors.hpp"

namespace a3b {

std::vector<std::array<int, 4>> enumerate_vertex_types(const std::array<double, 4>& angles,
                                                       double tol, int max_degree) {
    double min_angle = *std::min_element(angles.begin(), angles.end());
    if (min_angle <= 0) throw domain_error("enumerate_vertex_types: angles must be positive");
    if (max_degree <= 0) max_degree = static_cast<int>(std::ceil(2.0 / min_angle));
    std::vector<std::array<int, 4>> out;
    for (int d = 3; d <= max_degree; ++d) {
        for (int n1 = 0; n1 <= d; ++n1)
            for (int n2 = 0; n2 + n1 <= d; ++n2)
                for (int n3 = 0; n3 + n2 + n1 <= d; ++n3) {
                    int n4 = d - n1 - n2 - n3;
                    if ((n1 + n4) % 2 != 0) continue;
                    if (n1 > 0 && n2 > 0 && n3 > 0 && n4 > 0) continue;
                    double sum = n1 * angles[0] + n2 * angles[1] + n3 * angles[2] + n4 * angles[3];
                    if (std::fabs(sum - 2.0) <= tol) out.push_back({n1, n2, n3, n4});
                }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 4>> enumerate_vertex_types(const Quadrilateral& q, double tol,
                                                       int max_degree) {
    return enumerate_vertex_types(std::array<double, 4>{q.alpha, q.beta, q.gamma, q.delta}, tol,
                                  max_degree);
}

namespace {

long long det3(long long a, long long b, long long c, long long d, long long e, long long f,
               long long g, long long h, long long i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

} // namespace

long long coplanarity_check(const std::array<int, 4>& t1, const std::array<int, 4>& t2,
                            const std::array<int, 4>& t3) {
    if (t1 == t2 || t1 == t3 || t2 == t3)
        throw domain_error("coplanarity_check: the three types must be distinct");
    long long m[4][4];
    for (int j = 0; j < 4; ++j) {
        m[0][j] = 1;
        m[1][j] = t1[j];
        m[2][j] = t2[j];
        m[3][j] = t3[j];
    }
    long long det = 0;
    for (int j = 0; j < 4; ++j) {
        long long sub[3][3];
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        long long minor = det3(sub[0][0], sub[0][1], sub[0][2], sub[1][0], sub[1][1], sub[1][2],
                               sub[2][0], sub[2][1], sub[2][2]);
        det += (j % 2 == 0 ? 1 : -1) * m[0][j] * minor;
    }
    return det;
}

namespace {

void solve_rec(const std::vector<std::array<int, 4>>& types, size_t i, std::array<long long, 4>& rem,
               std::vector<long long>& weights, std::vector<std::vector<long long>>& out) {
    if (i == types.size()) {
        if (rem[0] == 0 && rem[1] == 0 && rem[2] == 0 && rem[3] == 0) out.push_back(weights);
        return;
    }
    const auto& t = types[i];
    long long w_max = std::numeric_limits<long long>::max();
    for (int k = 0; k < 4; ++k)
        if (t[k] > 0) w_max = std::min(w_max, rem[k] / t[k]);
    if (t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 0) w_max = 0; // degenerate all-zero type
    for (long long w = 0; w <= w_max; ++w) {
        for (int k = 0; k < 4; ++k) rem[k] -= w * t[k];
        weights.push_back(w);
        solve_rec(types, i + 1, rem, weights, out);
        weights.pop_back();
        for (int k = 0; k < 4; ++k) rem[k] += w * t[k];
    }
}

} // namespace

std::vector<std::vector<long long>> solve_multiplicities(
    const std::vector<std::array<int, 4>>& types, int f) {
    if (f < 0) throw domain_error("solve_multiplicities: f must be nonnegative");
    std::array<long long, 4> rem = {f, f, f, f};
    std::vector<long long> weights;
    std::vector<std::vector<long long>> out;
    solve_rec(types, 0, rem, weights, out);
    return out;
}

} // namespace a3b

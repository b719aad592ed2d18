// Spherical realization implementation: boundary walks, closed-form
// earth-map coordinates, breadth-first shape propagation, mesh metrics,
// OBJ export, and quaternion-based rigid alignment.

#include "a3b/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <string>

#include "a3b/errors.hpp"
#include "a3b/family.hpp"
#include "a3b/format.hpp"
#include "a3b/trig.hpp"

namespace a3b {

namespace {

// Advance (p, h) along the great circle through p with unit tangent h by an
// arc of len half-turns, keeping the frame orthonormal.
void advance(Vec3& p, Vec3& h, double len) {
    const double L = len * pi;
    Vec3 np = p * std::cos(L) + h * std::sin(L);
    Vec3 nh = p * (-std::sin(L)) + h * std::cos(L);
    p = np.normalized();
    h = (nh - p * dot(nh, p)).normalized();
}

// Rotate the heading about p by the exterior angle of an interior angle of
// `angle` half-turns; sign +1 turns left (counterclockwise seen from
// outside), -1 right.
void turn(const Vec3& p, Vec3& h, double angle, int sign) {
    const double tau = sign * (1 - angle) * pi;
    Vec3 nh = h * std::cos(tau) + cross(p, h) * std::sin(tau);
    h = (nh - p * dot(nh, p)).normalized();
}

struct WalkResult {
    std::array<Vec3, 4> arrivals; // arrivals[i] = corner (start + i + 1) mod 4
    Vec3 final_heading;
};

// Walk the full boundary starting at corner `start` placed at p with the
// initial heading h along side `start`.
WalkResult walk_boundary(const Quadrilateral& q, int start, Vec3 p, Vec3 h, int sign) {
    WalkResult w;
    for (int i = 0; i < 4; ++i) {
        const int s = (start + i) % 4;
        advance(p, h, q.side(s));
        w.arrivals[i] = p;
        turn(p, h, q.angle((s + 1) % 4), sign);
    }
    w.final_heading = h;
    return w;
}

Vec3 tangent_toward(const Vec3& p, const Vec3& target) {
    return (target - p * dot(target, p)).normalized();
}

} // namespace

Placement canonical_tile(const Quadrilateral& q) {
    const Vec3 p0{0, 0, 1}, h0{1, 0, 0};
    WalkResult w = walk_boundary(q, 0, p0, h0, +1);
    Placement pl;
    pl.corners = {p0, w.arrivals[0], w.arrivals[1], w.arrivals[2]};
    pl.closure = std::max(distance(w.arrivals[3], p0), distance(w.final_heading, h0));
    if (pl.closure > 1e-8)
        throw numeric_error("canonical_tile: boundary walk does not close (closure " +
                            format_double(pl.closure) + ")");
    return pl;
}

Mesh emt_coordinates(int f, double beta) {
    Quadrilateral q = emt_quad_allow_rhombus(f, beta); // validates f and beta
    const int Z = f / 2;
    const double t = (1 - beta) / 2;
    const double colat = (1 - q.a) * pi;
    const double lon = t * pi;
    const Vec3 D{std::sin(colat) * std::cos(lon), std::sin(colat) * std::sin(lon),
                 std::cos(colat)};
    const Vec3 F{std::cos(2 * pi / f), std::sin(2 * pi / f), 0};
    const Vec3 C = F * (2 * dot(D, F)) - D; // upper ring seed: D reflected through F
    Mesh mesh;
    mesh.positions[0] = Vec3{0, 0, 1};
    mesh.positions[1] = Vec3{0, 0, -1};
    auto rot_z = [](const Vec3& v, double ang) {
        return Vec3{v.x * std::cos(ang) - v.y * std::sin(ang),
                    v.x * std::sin(ang) + v.y * std::cos(ang), v.z};
    };
    for (int z = 0; z < Z; ++z) {
        mesh.positions[2 + z] = rot_z(C, 4 * pi / f * z);
        mesh.positions[2 + Z + z] = rot_z(D, 4 * pi / f * z);
    }
    mesh.discrepancy = 0;
    return mesh;
}

Mesh realize_by_propagation(const Tiling& t, const Quadrilateral& q) {
    const auto& tiles = t.tiles();
    if (tiles.empty()) throw domain_error("realize_by_propagation: empty tiling");
    std::vector<std::vector<std::pair<int, int>>> adj(tiles.size());
    for (const auto& e : t.edges()) {
        adj[e.t1].push_back({e.t2, e.s2});
        adj[e.t2].push_back({e.t1, e.s1});
    }
    std::map<int, Vec3> pos;
    double disc = 0;
    auto record = [&](int vid, const Vec3& p) {
        auto it = pos.find(vid);
        if (it == pos.end())
            pos.emplace(vid, p);
        else
            disc = std::max(disc, distance(it->second, p));
    };
    const Vec3 p0{0, 0, 1}, h0{1, 0, 0};
    pos[tiles[0].corners[0]] = p0;
    WalkResult w0 = walk_boundary(q, 0, p0, h0, tiles[0].chirality == '+' ? 1 : -1);
    for (int i = 0; i < 4; ++i) record(tiles[0].corners[(i + 1) % 4], w0.arrivals[i]);
    std::vector<char> placed(tiles.size(), 0);
    placed[0] = 1;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int cur = bfs.front();
        bfs.pop();
        for (auto [nb, ns] : adj[cur]) {
            if (placed[nb]) continue;
            const auto& c = tiles[nb].corners;
            const Vec3 P = pos.at(c[ns]);
            const Vec3 Q = pos.at(c[(ns + 1) % 4]);
            Vec3 h = tangent_toward(P, Q);
            // A side longer than a half turn leaves its corner away from
            // the short-arc direction between its endpoints.
            if (q.side(ns) > 1) h = -h;
            WalkResult w = walk_boundary(q, ns, P, h, tiles[nb].chirality == '+' ? 1 : -1);
            for (int i = 0; i < 4; ++i) record(c[(ns + i + 1) % 4], w.arrivals[i]);
            placed[nb] = 1;
            bfs.push(nb);
        }
    }
    for (char pl : placed)
        if (!pl) throw validation_error("realize_by_propagation: tiling is not connected");
    if (disc >= 1e-8)
        throw numeric_error("realize_by_propagation: tiling does not close up (discrepancy " +
                            format_double(disc) + ")");
    return Mesh{std::move(pos), disc};
}

namespace {

const Vec3& position_of(const Mesh& mesh, int vid, const char* who) {
    auto it = mesh.positions.find(vid);
    if (it == mesh.positions.end())
        throw domain_error(std::string(who) + ": vertex " + std::to_string(vid) +
                           " has no position");
    return it->second;
}

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

} // namespace

double verify_mesh(const Tiling& t, const Quadrilateral& q, const Mesh& mesh) {
    double worst = 0;
    for (const auto& tile : t.tiles()) {
        const auto& c = tile.corners;
        for (int s = 0; s < 4; ++s) {
            const Vec3& A = position_of(mesh, c[s], "verify_mesh");
            const Vec3& B = position_of(mesh, c[(s + 1) % 4], "verify_mesh");
            double measured = std::acos(clamp1(dot(A, B))) / pi;
            double expected = q.side(s);
            worst = std::max(worst, std::fabs(measured - std::min(expected, 2 - expected)));
        }
        for (int k = 0; k < 4; ++k) {
            const Vec3& P = position_of(mesh, c[k], "verify_mesh");
            Vec3 u = tangent_toward(P, position_of(mesh, c[(k + 1) % 4], "verify_mesh"));
            Vec3 v = tangent_toward(P, position_of(mesh, c[(k + 3) % 4], "verify_mesh"));
            // Edge tangents point along the tile boundary; a side longer
            // than a half turn runs opposite the short-arc direction.
            if (q.side(k) > 1) u = -u;
            if (q.side((k + 3) % 4) > 1) v = -v;
            double measured = std::acos(clamp1(dot(u, v))) / pi;
            double expected = q.angle(k);
            worst = std::max(worst, std::fabs(measured - std::min(expected, 2 - expected)));
        }
    }
    return worst;
}

double mesh_total_excess(const Tiling& t, const Mesh& mesh) {
    double total = 0;
    for (const auto& tile : t.tiles()) {
        const auto& c = tile.corners;
        // Counterclockwise rotation (seen from outside the sphere) from the
        // outgoing to the incoming boundary tangent at each corner.  For a
        // tile wound counterclockwise this sums the interior angles,
        // 2 pi + area; wound the other way it sums their complements,
        // 6 pi - area.  Every tile covers less than half the sphere, so the
        // two cases sit on opposite sides of 4 pi and the winding never has
        // to be taken on trust from the chirality letter.
        double ccw_sum = 0;
        for (int k = 0; k < 4; ++k) {
            const Vec3& P = position_of(mesh, c[k], "mesh_total_excess");
            Vec3 u = tangent_toward(P, position_of(mesh, c[(k + 1) % 4], "mesh_total_excess"));
            Vec3 v = tangent_toward(P, position_of(mesh, c[(k + 3) % 4], "mesh_total_excess"));
            double angle = std::atan2(dot(P, cross(u, v)), dot(u, v));
            if (angle < 0) angle += 2 * pi;
            ccw_sum += angle;
        }
        double interior_sum = ccw_sum < 4 * pi ? ccw_sum : 8 * pi - ccw_sum;
        total += interior_sum - 2 * pi;
    }
    return total;
}

std::string export_obj(const Tiling& t, int segments) {
    if (!t.mesh()) return "";
    if (segments < 1) throw domain_error("export_obj: segments must be >= 1");
    const Mesh& mesh = *t.mesh();
    std::vector<Vec3> points;
    auto point_index = [&points](const Vec3& p) {
        for (size_t i = 0; i < points.size(); ++i)
            if (distance(points[i], p) < 1e-9) return static_cast<int>(i);
        points.push_back(p);
        return static_cast<int>(points.size() - 1);
    };
    auto slerp = [](const Vec3& A, const Vec3& B, double s) {
        double omega = std::acos(clamp1(dot(A, B)));
        double so = std::sin(omega);
        if (so < 1e-12) return A;
        return (A * (std::sin((1 - s) * omega) / so) + B * (std::sin(s * omega) / so)).normalized();
    };
    std::vector<std::vector<int>> faces;
    for (const auto& tile : t.tiles()) {
        std::vector<int> loop;
        for (int s = 0; s < 4; ++s) {
            const Vec3& A = position_of(mesh, tile.corners[s], "export_obj");
            const Vec3& B = position_of(mesh, tile.corners[(s + 1) % 4], "export_obj");
            for (int j = 0; j < segments; ++j)
                loop.push_back(point_index(slerp(A, B, static_cast<double>(j) / segments)));
        }
        if (tile.chirality == '-') std::reverse(loop.begin(), loop.end());
        faces.push_back(std::move(loop));
    }
    std::string out;
    for (const auto& p : points) {
        out += "v ";
        out += format_double(p.x);
        out += ' ';
        out += format_double(p.y);
        out += ' ';
        out += format_double(p.z);
        out += '\n';
    }
    for (const auto& face : faces) {
        out += 'f';
        for (int idx : face) {
            out += ' ';
            out += std::to_string(idx + 1);
        }
        out += '\n';
    }
    return out;
}

namespace {

// Largest eigenvalue of a symmetric 4x4 matrix by cyclic Jacobi sweeps.
double max_eigenvalue_sym4(double m[4][4]) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < 4; ++p)
            for (int r = p + 1; r < 4; ++r) off += m[p][r] * m[p][r];
        if (off < 1e-28) break;
        for (int p = 0; p < 4; ++p) {
            for (int r = p + 1; r < 4; ++r) {
                if (std::fabs(m[p][r]) < 1e-300) continue;
                double theta = (m[r][r] - m[p][p]) / (2 * m[p][r]);
                double sgn = theta >= 0 ? 1.0 : -1.0;
                double tt = sgn / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double cs = 1 / std::sqrt(tt * tt + 1);
                double sn = tt * cs;
                double mpp = m[p][p], mrr = m[r][r], mpr = m[p][r];
                m[p][p] = cs * cs * mpp - 2 * sn * cs * mpr + sn * sn * mrr;
                m[r][r] = sn * sn * mpp + 2 * sn * cs * mpr + cs * cs * mrr;
                m[p][r] = m[r][p] = 0;
                for (int k = 0; k < 4; ++k) {
                    if (k == p || k == r) continue;
                    double mkp = m[k][p], mkr = m[k][r];
                    m[k][p] = m[p][k] = cs * mkp - sn * mkr;
                    m[k][r] = m[r][k] = sn * mkp + cs * mkr;
                }
            }
        }
    }
    return std::max(std::max(m[0][0], m[1][1]), std::max(m[2][2], m[3][3]));
}

double best_rotation_gain(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    double S[3][3] = {};
    for (size_t i = 0; i < a.size(); ++i) {
        const double av[3] = {a[i].x, a[i].y, a[i].z};
        const double bv[3] = {b[i].x, b[i].y, b[i].z};
        for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc) S[r][cc] += av[r] * bv[cc];
    }
    double K[4][4] = {
        {S[0][0] + S[1][1] + S[2][2], S[1][2] - S[2][1], S[2][0] - S[0][2], S[0][1] - S[1][0]},
        {S[1][2] - S[2][1], S[0][0] - S[1][1] - S[2][2], S[0][1] + S[1][0], S[2][0] + S[0][2]},
        {S[2][0] - S[0][2], S[0][1] + S[1][0], -S[0][0] + S[1][1] - S[2][2], S[1][2] + S[2][1]},
        {S[0][1] - S[1][0], S[2][0] + S[0][2], S[1][2] + S[2][1], -S[0][0] - S[1][1] + S[2][2]}};
    return max_eigenvalue_sym4(K);
}

} // namespace

double procrustes_residual(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    if (a.size() != b.size() || a.empty())
        throw domain_error("procrustes_residual: point lists must be nonempty and equal length");
    double norm2 = 0;
    for (size_t i = 0; i < a.size(); ++i) norm2 += dot(a[i], a[i]) + dot(b[i], b[i]);
    std::vector<Vec3> mirrored = a;
    for (auto& p : mirrored) p.z = -p.z;
    double gain = std::max(best_rotation_gain(a, b), best_rotation_gain(mirrored, b));
    double ss = std::max(0.0, norm2 - 2 * gain);
    return std::sqrt(ss / static_cast<double>(a.size()));
}

} // namespace a3b

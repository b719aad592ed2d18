// Tiling model implementation: edge derivation, chirality propagation,
// the eight-part validator and the corruption helper.

#include "a3b/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "a3b/errors.hpp"
#include "a3b/trig.hpp"

namespace a3b {

namespace {

std::pair<int, int> side_endpoints(const Tile& t, int s) {
    return {t.corners[s], t.corners[(s + 1) % 4]};
}

std::pair<int, int> unordered_key(std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

} // namespace

void Tiling::derive_edges() {
    edges_.clear();
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> groups;
    int max_id = -1;
    for (int ti = 0; ti < static_cast<int>(tiles_.size()); ++ti) {
        for (int s = 0; s < 4; ++s) {
            groups[unordered_key(side_endpoints(tiles_[ti], s))].push_back({ti, s});
            max_id = std::max(max_id, tiles_[ti].corners[s]);
        }
    }
    vertex_count_ = max_id + 1;
    pairing_ok_ = true;
    for (const auto& [key, sides] : groups) {
        if (sides.size() == 2) {
            edges_.push_back({sides[0].first, sides[0].second, sides[1].first, sides[1].second});
        } else {
            pairing_ok_ = false;
        }
    }
}

Tiling Tiling::from_corners(int f, std::vector<std::array<int, 4>> corners) {
    if (static_cast<int>(corners.size()) != f)
        throw domain_error("from_corners: tile count does not match f");
    Tiling t;
    t.f_ = f;
    t.tiles_.reserve(corners.size());
    for (const auto& c : corners) t.tiles_.push_back(Tile{c, '+'});
    t.derive_edges();
    if (!t.pairing_ok_)
        throw validation_error("from_corners: sides do not glue in pairs");

    // Chirality propagation: two tiles sharing an edge traverse it in
    // opposite corner order exactly when they have the same handedness.
    std::vector<std::vector<std::pair<int, int>>> nbr(t.tiles_.size());
    for (const auto& e : t.edges_) {
        auto a = side_endpoints(t.tiles_[e.t1], e.s1);
        auto b = side_endpoints(t.tiles_[e.t2], e.s2);
        int sign = (a.first == b.second && a.second == b.first) ? +1 : -1;
        nbr[e.t1].push_back({e.t2, sign});
        nbr[e.t2].push_back({e.t1, sign});
    }
    std::vector<int> mark(t.tiles_.size(), 0);
    std::queue<int> bfs;
    mark[0] = +1;
    bfs.push(0);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (auto [v, sign] : nbr[u]) {
            int want = mark[u] * sign;
            if (mark[v] == 0) {
                mark[v] = want;
                bfs.push(v);
            } else if (mark[v] != want) {
                throw validation_error("from_corners: inconsistent tile orientations");
            }
        }
    }
    for (size_t i = 0; i < t.tiles_.size(); ++i) {
        if (mark[i] == 0) throw validation_error("from_corners: tiling is not connected");
        t.tiles_[i].chirality = mark[i] > 0 ? '+' : '-';
    }
    return t;
}

Tiling Tiling::raw(int f, std::vector<Tile> tiles) {
    Tiling t;
    t.f_ = f;
    t.tiles_ = std::move(tiles);
    t.derive_edges();
    return t;
}

Tiling Tiling::with_mesh(Mesh m) const {
    Tiling t = *this;
    t.mesh_ = std::move(m);
    return t;
}

std::vector<std::pair<int, int>> Tiling::incidences(int vertex) const {
    std::vector<std::pair<int, int>> out;
    for (int ti = 0; ti < static_cast<int>(tiles_.size()); ++ti)
        for (int c = 0; c < 4; ++c)
            if (tiles_[ti].corners[c] == vertex) out.push_back({ti, c});
    return out;
}

std::vector<int> Tiling::vertex_ids() const {
    std::set<int> ids;
    for (const auto& t : tiles_)
        for (int c : t.corners) ids.insert(c);
    return std::vector<int>(ids.begin(), ids.end());
}

std::map<std::array<int, 4>, int> vertex_census(const Tiling& t) {
    std::map<int, std::array<int, 4>> at_vertex;
    for (const auto& tile : t.tiles())
        for (int c = 0; c < 4; ++c) at_vertex[tile.corners[c]][c]++;
    std::map<std::array<int, 4>, int> census;
    for (const auto& [v, counts] : at_vertex) census[counts]++;
    return census;
}

double total_excess(const Quadrilateral& q, int f) {
    return f * (q.alpha + q.beta + q.gamma + q.delta - 2.0);
}

namespace {

// Neumaier-compensated sum; robust against cancellation in angle sums.
double compensated_sum(const std::vector<double>& xs) {
    double s = 0, comp = 0;
    for (double x : xs) {
        double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            comp += (s - t) + x;
        else
            comp += (x - t) + s;
        s = t;
    }
    return s + comp;
}

struct VertexData {
    std::vector<std::pair<int, int>> inc; // (tile, corner)
    std::array<int, 4> kind_counts{};
};

} // namespace

ValidationReport validate(const Tiling& t, const Quadrilateral& q, double tol) {
    ValidationReport rep;
    auto add = [&rep](const std::string& name, bool passed, const std::string& detail) {
        rep.checks.push_back({name, passed, passed ? "" : detail});
    };
    const auto& tiles = t.tiles();
    const int f = t.f();

    // Everything below re-derives its data from the corner arrays alone.
    std::map<int, VertexData> verts;
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> side_groups;
    for (int ti = 0; ti < static_cast<int>(tiles.size()); ++ti) {
        for (int c = 0; c < 4; ++c) {
            auto& vd = verts[tiles[ti].corners[c]];
            vd.inc.push_back({ti, c});
            vd.kind_counts[c]++;
            side_groups[unordered_key(side_endpoints(tiles[ti], c))].push_back({ti, c});
        }
    }

    // (1) edge-to-edge: sides glue in pairs and labels agree (b with b).
    {
        bool ok = static_cast<int>(tiles.size()) == f;
        std::ostringstream why;
        if (!ok) why << "tile count " << tiles.size() << " != f = " << f << "; ";
        for (const auto& [key, sides] : side_groups) {
            if (sides.size() != 2) {
                ok = false;
                why << "side {" << key.first << "," << key.second << "} glued "
                    << sides.size() << " times; ";
                continue;
            }
            bool b1 = sides[0].second == 3, b2 = sides[1].second == 3;
            if (b1 != b2) {
                ok = false;
                why << "side {" << key.first << "," << key.second << "} glues a to b; ";
            }
        }
        add("edge-to-edge", ok, why.str());
    }

    // Pairing map for the umbrella walk, built only from well-glued sides.
    std::map<std::pair<int, int>, std::pair<int, int>> partner;
    for (const auto& [key, sides] : side_groups)
        if (sides.size() == 2) {
            partner[sides[0]] = sides[1];
            partner[sides[1]] = sides[0];
        }

    // (2) tile structure: distinct corners, degrees >= 3, every vertex fan
    // closes into a single umbrella, chirality assignment consistent.
    {
        bool ok = true;
        std::ostringstream why;
        for (int ti = 0; ti < static_cast<int>(tiles.size()); ++ti) {
            std::set<int> distinct(tiles[ti].corners.begin(), tiles[ti].corners.end());
            if (distinct.size() != 4) {
                ok = false;
                why << "tile " << ti << " repeats a corner; ";
            }
        }
        for (const auto& [v, vd] : verts) {
            if (vd.inc.size() < 3) {
                ok = false;
                why << "vertex " << v << " has degree " << vd.inc.size() << "; ";
                continue;
            }
            // Umbrella walk: starting from one incidence, repeatedly cross
            // the side of the current tile at v that was not just crossed;
            // after degree-many steps the walk must return to the start,
            // having visited every incidence exactly once.
            std::set<std::pair<int, int>> seen;
            const auto start = vd.inc.front();
            auto cur = start;
            int cross = start.second; // side of the current tile to cross next
            bool stuck = false;
            for (size_t step = 0; step < vd.inc.size(); ++step) {
                if (seen.count(cur)) {
                    stuck = true; // premature revisit: the fan splits
                    break;
                }
                seen.insert(cur);
                auto it = partner.find({cur.first, cross});
                if (it == partner.end()) {
                    stuck = true;
                    break;
                }
                auto [nt, ns] = it->second;
                int nc;
                if (tiles[nt].corners[ns] == v) nc = ns;
                else if (tiles[nt].corners[(ns + 1) % 4] == v) nc = (ns + 1) % 4;
                else {
                    stuck = true;
                    break;
                }
                cur = {nt, nc};
                // The two sides of nt at this corner are nc (outgoing) and
                // nc-1 (incoming); continue through the one not entered by.
                cross = (ns == nc) ? (nc + 3) % 4 : nc;
            }
            if (stuck || cur != start || seen.size() != vd.inc.size()) {
                ok = false;
                why << "vertex " << v << " fan does not close into one umbrella; ";
            }
        }
        // Re-derive chirality marks along glued sides and compare.
        {
            std::vector<int> mark(tiles.size(), 0);
            std::vector<std::vector<std::pair<int, int>>> nbr(tiles.size());
            for (const auto& [key, sides] : side_groups)
                if (sides.size() == 2) {
                    auto a = side_endpoints(tiles[sides[0].first], sides[0].second);
                    auto b = side_endpoints(tiles[sides[1].first], sides[1].second);
                    int sign = (a.first == b.second && a.second == b.first) ? +1 : -1;
                    nbr[sides[0].first].push_back({sides[1].first, sign});
                    nbr[sides[1].first].push_back({sides[0].first, sign});
                }
            std::queue<int> bfs;
            if (!tiles.empty()) {
                mark[0] = tiles[0].chirality == '-' ? -1 : +1;
                bfs.push(0);
            }
            bool consistent = true;
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (auto [w, sign] : nbr[u]) {
                    int want = mark[u] * sign;
                    if (mark[w] == 0) {
                        mark[w] = want;
                        bfs.push(w);
                    } else if (mark[w] != want) {
                        consistent = false;
                    }
                }
            }
            for (size_t i = 0; i < tiles.size(); ++i) {
                int declared = tiles[i].chirality == '-' ? -1 : +1;
                if (mark[i] != 0 && mark[i] != declared) consistent = false;
            }
            if (!consistent) {
                ok = false;
                why << "declared chirality disagrees with orientation propagation; ";
            }
        }
        add("tile-structure", ok, why.str());
    }

    // (3) vertex sums: angles at every vertex add to exactly 2.
    {
        bool ok = true;
        std::ostringstream why;
        for (const auto& [v, vd] : verts) {
            std::vector<double> terms;
            for (auto [ti, c] : vd.inc) {
                (void)ti;
                terms.push_back(q.angle(c));
            }
            double s = compensated_sum(terms);
            if (std::fabs(s - 2.0) > tol) {
                ok = false;
                why << "vertex " << v << " angle sum " << s << "; ";
            }
            if (q.exact) {
                AffineAngle sum;
                for (auto [ti, c] : vd.inc) {
                    (void)ti;
                    sum = sum + (*q.exact)[c];
                }
                if (!sum.is_constant(Rational(2))) {
                    ok = false;
                    why << "vertex " << v << " angle sum differs from 2 in exact arithmetic; ";
                }
            }
        }
        add("vertex-sums", ok, why.str());
    }

    // (4) corner counts: each corner kind appears exactly f times overall.
    {
        std::array<long long, 4> totals{};
        for (const auto& [v, vd] : verts)
            for (int k = 0; k < 4; ++k) totals[k] += vd.kind_counts[k];
        bool ok = true;
        std::ostringstream why;
        for (int k = 0; k < 4; ++k)
            if (totals[k] != f) {
                ok = false;
                why << "corner kind " << k << " appears " << totals[k] << " times, expected "
                    << f << "; ";
            }
        add("corner-counts", ok, why.str());
    }

    // (5) parity: n_alpha + n_delta even at every vertex (the a-ends and
    // b-ends of edges must balance around it).
    {
        bool ok = true;
        std::ostringstream why;
        for (const auto& [v, vd] : verts)
            if ((vd.kind_counts[0] + vd.kind_counts[3]) % 2 != 0) {
                ok = false;
                why << "vertex " << v << " has odd alpha+delta count; ";
            }
        add("parity", ok, why.str());
    }

    // (6) Euler: v - e + f = 2, with e from the derived side groups.
    {
        long long v_cnt = static_cast<long long>(verts.size());
        long long e_cnt = static_cast<long long>(side_groups.size());
        bool ok = v_cnt - e_cnt + f == 2;
        std::ostringstream why;
        why << "v=" << v_cnt << " e=" << e_cnt << " f=" << f;
        add("euler", ok, why.str());
    }

    // (7) degree counts: f = 6 + sum_{k>=4} (k-3) v_k and
    //     v_3 = 8 + sum_{k>=5} (k-4) v_k.
    {
        std::map<int, long long> vk;
        for (const auto& [v, vd] : verts) vk[static_cast<int>(vd.inc.size())]++;
        long long rhs1 = 6, rhs2 = 8, v3 = vk.count(3) ? vk[3] : 0;
        for (const auto& [k, cnt] : vk) {
            if (k >= 4) rhs1 += (k - 3) * cnt;
            if (k >= 5) rhs2 += (k - 4) * cnt;
        }
        bool ok = (f == rhs1) && (v3 == rhs2);
        std::ostringstream why;
        why << "f=" << f << " vs " << rhs1 << ", v3=" << v3 << " vs " << rhs2;
        add("degree-counts", ok, why.str());
    }

    // (8) kind exclusion: no vertex sees all four corner kinds.
    {
        bool ok = true;
        std::ostringstream why;
        for (const auto& [v, vd] : verts)
            if (vd.kind_counts[0] > 0 && vd.kind_counts[1] > 0 && vd.kind_counts[2] > 0 &&
                vd.kind_counts[3] > 0) {
                ok = false;
                why << "vertex " << v << " carries all four corner kinds; ";
            }
        add("kind-exclusion", ok, why.str());
    }

    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.passed; });
    return rep;
}

Tiling corrupt(const Tiling& t, std::uint64_t seed, std::string* what) {
    std::mt19937_64 rng(seed);
    std::vector<Tile> tiles = t.tiles();
    auto ids = t.vertex_ids();
    int ti = static_cast<int>(rng() % tiles.size());
    int c = static_cast<int>(rng() % 4);
    std::ostringstream desc;
    switch (rng() % 5) {
        case 0: { // rewire a corner to some other existing vertex
            int v;
            do {
                v = ids[rng() % ids.size()];
            } while (v == tiles[ti].corners[c]);
            desc << "tile " << ti << " corner " << c << " rewired to vertex " << v;
            tiles[ti].corners[c] = v;
            break;
        }
        case 1: { // rewire a corner to a fresh vertex
            int v = *std::max_element(ids.begin(), ids.end()) + 1;
            desc << "tile " << ti << " corner " << c << " rewired to new vertex " << v;
            tiles[ti].corners[c] = v;
            break;
        }
        case 2: { // duplicate another corner of the same tile
            int c2 = (c + 1 + static_cast<int>(rng() % 3)) % 4;
            desc << "tile " << ti << " corner " << c << " duplicated from corner " << c2;
            tiles[ti].corners[c] = tiles[ti].corners[c2];
            break;
        }
        case 3: { // swap two corners of one tile
            int c2 = (c + 1 + static_cast<int>(rng() % 3)) % 4;
            desc << "tile " << ti << " corners " << c << " and " << c2 << " swapped";
            std::swap(tiles[ti].corners[c], tiles[ti].corners[c2]);
            break;
        }
        default: { // rotate the corner cycle of one tile
            desc << "tile " << ti << " corner cycle rotated";
            std::rotate(tiles[ti].corners.begin(), tiles[ti].corners.begin() + 1,
                        tiles[ti].corners.end());
            break;
        }
    }
    if (what) *what = desc.str();
    return Tiling::raw(t.f(), std::move(tiles));
}

} // namespace a3b

#pragma once

// Combinatorial model of an edge-to-edge tiling of the sphere by f copies
// of the a^3 b quadrilateral, plus the validator that re-derives everything
// from the corner arrays and checks the structural and arithmetic laws a
// spherical tiling must obey.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a3b/quad.hpp"
#include "a3b/vec3.hpp"

namespace a3b {

struct Tile {
    std::array<int, 4> corners{}; // vertex ids at (alpha, beta, gamma, delta)
    char chirality = '+';         // '-' marks a mirror-image copy
};

// One undirected edge of the tiling: two tile sides glued together.
struct TilingEdge {
    int t1, s1; // tile index, side index (side s joins corners s, s+1)
    int t2, s2;
};

// Vertex positions attached to a tiling after geometric realization.
struct Mesh {
    std::map<int, Vec3> positions; // vertex id -> unit vector
    double discrepancy = 0;        // worst disagreement met while assembling
};

class Tiling {
public:
    // Build from corner arrays; derives edges by matching side endpoints and
    // assigns chirality by breadth-first propagation from tile 0 ('+').
    // Throws validation_error if sides don't pair up or orientation is
    // inconsistent -- generator output always satisfies both.
    static Tiling from_corners(int f, std::vector<std::array<int, 4>> corners);

    // Build without requiring consistency (chirality as given, edges matched
    // best-effort).  Used by the corruption helper and the file importer so
    // that the validator, not the constructor, reports the defects.
    static Tiling raw(int f, std::vector<Tile> tiles);

    int f() const { return f_; }
    const std::vector<Tile>& tiles() const { return tiles_; }
    int vertex_count() const { return vertex_count_; }
    // Edges derived from side-endpoint matching; complete only if every
    // pairing succeeded (see pairing_ok).
    const std::vector<TilingEdge>& edges() const { return edges_; }
    bool pairing_ok() const { return pairing_ok_; }
    const std::optional<Mesh>& mesh() const { return mesh_; }
    Tiling with_mesh(Mesh m) const;

    // All (tile, corner) incidences at a vertex id.
    std::vector<std::pair<int, int>> incidences(int vertex) const;
    // Sorted list of distinct vertex ids.
    std::vector<int> vertex_ids() const;

private:
    int f_ = 0;
    int vertex_count_ = 0;
    std::vector<Tile> tiles_;
    std::vector<TilingEdge> edges_;
    bool pairing_ok_ = false;
    std::optional<Mesh> mesh_;

    void derive_edges();
};

// Count of each corner kind (n_alpha, n_beta, n_gamma, n_delta) meeting at
// a vertex -> number of vertices with that pattern.
std::map<std::array<int, 4>, int> vertex_census(const Tiling& t);

// Total angular excess of the tiling in pi units: f * (angle sum - 2).
// Equals 4 (i.e. the full sphere area 4 pi) for any exact tiling.
double total_excess(const Quadrilateral& q, int f);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail; // empty when passed
};
struct ValidationReport {
    std::vector<CheckResult> checks;
    bool ok = false;
};

// The eight validation checks, all re-derived from the corner arrays alone:
//   edge-to-edge     every side glued to exactly one other, a to a and b to b
//   tile-structure   distinct corners per tile, consistent umbrella fans,
//                    vertex degrees >= 3, declared chirality consistent
//   vertex-sums      angles at every vertex sum to 2 (exactly, via the
//                    affine forms, when available; always numerically)
//   corner-counts    every corner kind appears exactly f times
//   parity           n_alpha + n_delta is even at every vertex
//   euler            v - e + f = 2
//   degree-counts    f = 6 + sum (k-3) v_k  and  v_3 = 8 + sum (k-4) v_k
//   kind-exclusion   no vertex carries all four corner kinds
ValidationReport validate(const Tiling& t, const Quadrilateral& q, double tol = 1e-9);

// Returns a copy with one random structural mutation (corner rewired to
// another vertex, to a fresh vertex, duplicated inside its tile, two corners
// swapped, or the corner cycle rotated).  Deterministic per seed; `what`
// receives a short description.
Tiling corrupt(const Tiling& t, std::uint64_t seed, std::string* what = nullptr);

} // namespace a3b

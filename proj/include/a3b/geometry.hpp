#pragma once

// Spherical realization: walking a tile on the unit sphere, closed-form
// coordinates for the earth-map tilings, breadth-first propagation of a
// tile shape over any tiling, mesh verification, OBJ export with arcs
// subdivided into great-circle segments, and rigid alignment of meshes.

#include <array>
#include <string>
#include <vector>

#include "a3b/quad.hpp"
#include "a3b/tiling.hpp"
#include "a3b/vec3.hpp"

namespace a3b {

// One tile walked on the unit sphere: corner positions in corner order and
// how far the boundary walk missed closing up (both position and heading).
struct Placement {
    std::array<Vec3, 4> corners;
    double closure;
};

// Walks the tile boundary from the alpha corner at the north pole heading
// along (1, 0, 0), turning left by the exterior angle at each corner.
// Throws numeric_error if the walk fails to close within 1e-8.
Placement canonical_tile(const Quadrilateral& q);

// Closed-form vertex positions for the earth-map tiling build_emt(f) at the
// given beta (rhombus point allowed): poles at +-z, the two vertex rings
// placed symmetrically and propagated by the f/2-fold rotation about the
// polar axis.
Mesh emt_coordinates(int f, double beta);

// Realizes any tiling by placing tile 0 canonically and walking every other
// tile from an already-placed shared edge, breadth first.  The returned
// discrepancy is the worst chordal mismatch at re-encountered vertices;
// if it reaches 1e-8 the tiling does not close up with this quadrilateral
// and numeric_error is thrown.
Mesh realize_by_propagation(const Tiling& t, const Quadrilateral& q);

// Worst deviation (in half-turn units) of the mesh from the quadrilateral:
// every edge arc against its expected side length and every corner angle
// against its expected interior angle, lengths and angles beyond a half
// turn compared against their folded value min(x, 2 - x).
double verify_mesh(const Tiling& t, const Quadrilateral& q, const Mesh& mesh);

// Total spherical excess of the mesh in radians: the sum over tiles of
// (interior angle sum - 2 pi), with interior angles measured from the mesh
// using each tile's orientation.  A mesh that exactly partitions the
// sphere totals 4 pi.
double mesh_total_excess(const Tiling& t, const Mesh& mesh);

// Wavefront OBJ text for the tiling's mesh: each edge arc subdivided into
// `segments` great-circle segments, shared points written once, each tile
// one face with outward orientation.  A tiling without a mesh yields the
// empty string.
std::string export_obj(const Tiling& t, int segments = 32);

// Root-mean-square distance between two equal-length point lists after the
// best rotation (or improper rotation) about the origin mapping A onto B.
double procrustes_residual(const std::vector<Vec3>& a, const std::vector<Vec3>& b);

} // namespace a3b

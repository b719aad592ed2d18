#pragma once

// Integer vertex arithmetic: enumerating which corner combinations can
// meet at a vertex of the sphere, an exact independence test for triples
// of vertex types, and recovery of the full vertex census of a tiling
// from its list of admissible types.

#include <array>
#include <vector>

#include "a3b/quad.hpp"

namespace a3b {

// All corner-count vectors (n_alpha, n_beta, n_gamma, n_delta) of degree 3
// up to max_degree whose angles sum to a full turn within tol, subject to
// the combinatorial constraints that hold at every vertex of an
// edge-to-edge tiling by this tile: n_alpha + n_delta is even, and no
// vertex carries all four corner kinds.  max_degree = 0 picks the largest
// degree any full turn can accommodate, ceil(2 / min angle).  Output is
// sorted lexicographically.
std::vector<std::array<int, 4>> enumerate_vertex_types(const std::array<double, 4>& angles,
                                                       double tol = 1e-9, int max_degree = 0);
std::vector<std::array<int, 4>> enumerate_vertex_types(const Quadrilateral& q, double tol = 1e-9,
                                                       int max_degree = 0);

// Determinant of the 4x4 integer matrix whose rows are (1,1,1,1) and the
// three type vectors: zero exactly when the angle-sum equations of the
// three types together with the total-turn normalization are linearly
// dependent.  Throws domain_error when two of the three types coincide.
long long coplanarity_check(const std::array<int, 4>& t1, const std::array<int, 4>& t2,
                            const std::array<int, 4>& t3);

// All ways to assign a nonnegative multiplicity to each vertex type so
// that every corner kind is used exactly f times in total.  Each solution
// lists multiplicities in input order; solutions come in lexicographic
// order.
std::vector<std::vector<long long>> solve_multiplicities(
    const std::vector<std::array<int, 4>>& types, int f);

} // namespace a3b

#pragma once

// Tiling file format: a canonical, byte-stable JSON serialization of a
// tiling together with its quadrilateral and optional mesh, and a strict
// importer that cross-checks the redundant fields so file corruption is
// detected rather than silently accepted.

#include <string>

#include "a3b/quad.hpp"
#include "a3b/tiling.hpp"

namespace a3b {

// Canonical JSON text: top level {"angles","edges","f","mesh","tiles",
// "type","vertices"} with keys sorted at every level, "type" always
// "a3b", each vertex carrying its corner-count vector (n_alpha, n_beta,
// n_gamma, n_delta), numbers in the shortest decimal form that
// round-trips, no whitespace, one trailing newline.  The same tiling
// always serializes to the same bytes.
std::string export_json(const Tiling& t, const Quadrilateral& q);

struct ImportedTiling {
    Tiling tiling;
    Quadrilateral quad;
};

// Parses and validates a tiling file.  Throws validation_error when the
// text is not valid JSON, fields are missing or ill-typed, the declared
// chiralities disagree with the orientation derived from the corner
// arrays (up to a global mirror), a vertex's corner-count vector
// disagrees with the corner arrays, or the mesh does not cover exactly
// the tiling's vertices.
ImportedTiling import_json(const std::string& text);

} // namespace a3b

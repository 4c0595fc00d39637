#pragma once

// JSON encodings of forms, cells, stars and reports. Rationals travel as
// "p/q" strings, lattice vectors as integer arrays.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "delaunay4/catalog.hpp"
#include "delaunay4/delaunay.hpp"
#include "delaunay4/faces.hpp"
#include "delaunay4/generation.hpp"
#include "delaunay4/verifier.hpp"

namespace d4::io {

using nlohmann::json;

/// Parses text, reporting the byte offset on malformed JSON.
json parse_text(std::string_view text, std::string_view origin);

json to_json(const QuadraticForm& b);
/// {"rank": g, "matrix": [[...]]}; entries may be "p/q" strings or integers.
QuadraticForm form_from_json(const json& j);

json to_json(const LatticeVector& v);
LatticeVector vector_from_json(const json& j, std::size_t rank, const std::string& where);

/// {"vertices": [...]} plus "center"/"sq_radius" when known.
json to_json(const DelaunayCell& c);
DelaunayCell cell_from_json(const json& j);
std::vector<DelaunayCell> cells_from_json(const json& j);

json to_json(const DelaunayStar& s);
/// Only the orbit representatives, as the star's "cells" too.
json to_json_mod_translation(const DelaunayStar& s);
DelaunayStar star_from_json(const json& j);

json to_json(const GenerationReport& r);
json to_json(const NamedCone& c);
json catalog_to_json();
json to_json(const FusionReport& r);
json to_json(const TableDiff& d);
json to_json(const SuiteReport& r);
json to_json(const ChamberCoordinates& c);

/// List of {dropped, shape, orbit, type}.
json faces_report();

/// Stable text form: two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace d4::io

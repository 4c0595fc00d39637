#include "delaunay4/io.hpp"

#include <algorithm>

namespace d4::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::parse, where + ": " + what);
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail(where, "expected a \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

json rationals(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

json cells(const std::vector<DelaunayCell>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

json plain_cells(const std::vector<DelaunayCell>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(json{{"vertices", to_json(make_cell(c.vertices))["vertices"]}});
  return out;
}

}  // namespace

json parse_text(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string(origin) + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

json to_json(const QuadraticForm& b) {
  json m = json::array();
  for (std::size_t i = 0; i < b.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < b.rank(); ++j) row.push_back(format_rational(b(i, j)));
    m.push_back(row);
  }
  return json{{"rank", b.rank()}, {"matrix", m}};
}

QuadraticForm form_from_json(const json& j) {
  const json& rank = member(j, "rank", "form");
  if (!rank.is_number_unsigned() || rank.get<std::size_t>() < 1 || rank.get<std::size_t>() > 4)
    fail("form.rank", "expected an integer between 1 and 4");
  const std::size_t g = rank.get<std::size_t>();
  const json& rows = member(j, "matrix", "form");
  if (!rows.is_array() || rows.size() != g) fail("form.matrix", "expected " + std::to_string(g) + " rows");
  Matrix m(g, g);
  for (std::size_t r = 0; r < g; ++r) {
    const std::string where = "form.matrix[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != g) fail(where, "expected " + std::to_string(g) + " entries");
    for (std::size_t c = 0; c < g; ++c) m(r, c) = rational_from_json(rows[r][c], where + "[" + std::to_string(c) + "]");
  }
  try {
    return QuadraticForm(m);
  } catch (const Error& e) {
    fail("form.matrix", e.what());
  }
}

json to_json(const LatticeVector& v) { return json(v.coords()); }

LatticeVector vector_from_json(const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array() || (rank && j.size() != rank))
    fail(where, rank ? "expected " + std::to_string(rank) + " integers" : "expected an integer array");
  std::vector<std::int64_t> c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) fail(where + "[" + std::to_string(k) + "]", "expected an integer");
    c.push_back(j[k].get<std::int64_t>());
  }
  return LatticeVector(std::move(c));
}

json to_json(const DelaunayCell& c) {
  json verts = json::array();
  for (const auto& v : c.vertices) verts.push_back(to_json(v));
  json out{{"vertices", verts}};
  if (c.center) out["center"] = rationals(*c.center);
  if (c.sq_radius) out["sq_radius"] = format_rational(*c.sq_radius);
  return out;
}

DelaunayCell cell_from_json(const json& j) {
  const json& verts = member(j, "vertices", "cell");
  if (!verts.is_array() || verts.empty()) fail("cell.vertices", "expected a nonempty array");
  std::vector<LatticeVector> v;
  const std::size_t g = verts[0].is_array() ? verts[0].size() : 0;
  if (g < 1 || g > 4) fail("cell.vertices[0]", "expected 1 to 4 integers");
  for (std::size_t k = 0; k < verts.size(); ++k)
    v.push_back(vector_from_json(verts[k], g, "cell.vertices[" + std::to_string(k) + "]"));
  return make_cell(std::move(v));
}

std::vector<DelaunayCell> cells_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) list = &member(j, "cells", "pieces");
  if (!list->is_array()) fail("pieces", "expected an array of cells");
  std::vector<DelaunayCell> out;
  for (std::size_t k = 0; k < list->size(); ++k) {
    try {
      out.push_back(cell_from_json((*list)[k]));
    } catch (const Error& e) {
      fail("pieces[" + std::to_string(k) + "]", e.what());
    }
  }
  return out;
}

json to_json(const DelaunayStar& s) {
  return json{{"form", to_json(s.form)}, {"cells", cells(s.cells)}, {"orbit_reps", plain_cells(s.orbit_reps)}};
}

json to_json_mod_translation(const DelaunayStar& s) {
  return json{{"form", to_json(s.form)}, {"cells", plain_cells(s.orbit_reps)}, {"orbit_reps", plain_cells(s.orbit_reps)}};
}

DelaunayStar star_from_json(const json& j) {
  DelaunayStar s;
  s.form = form_from_json(member(j, "form", "star"));
  for (const auto& c : cells_from_json(member(j, "cells", "star"))) s.cells.push_back(make_cell(s.form, c.vertices));
  s.orbit_reps = cells_from_json(member(j, "orbit_reps", "star"));
  return s;
}

json to_json(const GenerationReport& r) {
  json out{{"totally_generating", r.totally_generating},
           {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
           {"pieces", plain_cells(r.decomposition)}};
  if (r.simplicially_generating) {
    out["simplicially_generating"] = *r.simplicially_generating;
    out["nilpotency"] = *r.simplicially_generating ? "1" : "unknown";
  }
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json to_json(const NamedCone& c) {
  json gens = json::array();
  for (const auto& g : c.generators) gens.push_back(to_json(g)["matrix"]);
  return json{{"name", c.name}, {"rank", c.ambient_rank}, {"labels", c.labels}, {"generators", gens}};
}

json catalog_to_json() {
  json out = json::array();
  for (const auto& c : catalog_entries()) out.push_back(to_json(c));
  return out;
}

json to_json(const FusionReport& r) {
  json fusions = json::array();
  for (const auto& f : r.fusions) {
    json names = json::array();
    for (const auto& p : f.pieces) names.push_back(display_name(p));
    fusions.push_back(json{{"coarse", to_json(make_cell(f.coarse.vertices))},
                           {"name", display_name(f.coarse)},
                           {"pieces", plain_cells(f.pieces)},
                           {"piece_names", names}});
  }
  json unchanged = json::array();
  for (const auto& c : r.unchanged) unchanged.push_back(display_name(c));
  return json{{"coarse_cone", r.coarse_cone},
              {"fine_cone", r.fine_cone},
              {"pass", r.ok()},
              {"fusions", fusions},
              {"unchanged", unchanged},
              {"volume_conserved", r.volume_conserved},
              {"pieces_disjoint", r.pieces_disjoint},
              {"each_fine_cell_once", r.each_fine_once},
              {"notes", r.notes}};
}

json to_json(const TableDiff& d) {
  auto rows = [](const std::vector<TableRow>& rs) {
    json out = json::array();
    for (const auto& r : rs)
      out.push_back(json{{"no", r.no}, {"left", r.left}, {"middle", r.middle}, {"right", r.right}});
    return out;
  };
  return json{{"table", d.which},
              {"columns", {d.left_cone, d.middle_cone, d.right_cone}},
              {"pass", d.ok()},
              {"expected", rows(d.expected)},
              {"computed", rows(d.computed)},
              {"mismatches", d.mismatches},
              {"unmatched", d.unmatched}};
}

json to_json(const SuiteReport& r) {
  json details = json::array();
  for (const auto& c : r.details) {
    json d{{"check", c.name}, {"pass", c.pass}};
    if (!c.info.empty()) d["info"] = c.info;
    details.push_back(d);
  }
  return json{{"suite", r.suite}, {"pass", r.pass}, {"details", details}};
}

json to_json(const ChamberCoordinates& c) {
  json coeffs = json::object();
  for (std::size_t k = 0; k < c.labels.size(); ++k) coeffs[c.labels[k]] = format_rational(c.coefficients[k]);
  return json{{"split", c.split}, {"coefficients", coeffs}, {"y_ab", format_rational(c.y_ab)},
              {"y_cd", format_rational(c.y_cd)}};
}

json faces_report() {
  const auto faces = enumerate_faces();
  const auto orbits = orbit_classify(faces, group_G());
  json out = json::array();
  for (const auto& f : faces) {
    json dropped = json::array();
    for (const auto& s : f.dropped) dropped.push_back(json{s.p, s.q, s.plus ? "+" : "-"});
    const auto type = classify_type(f.dropped, orbits);
    out.push_back(json{{"dropped", dropped},
                       {"shape", to_string(f.graph.shape())},
                       {"orbit", type == VoronoiType::II ? "BF" : "RT"},
                       {"type", to_string(type)}});
  }
  return out;
}

namespace {

// Arrays of scalars stay on one line so vectors and matrix rows read as such.
void write(const json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (j.is_array() && !j.empty() && std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    out += j.dump();
    return;
  }
  if (j.is_array() && !j.empty()) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      write(j[k], depth + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
    return;
  }
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + json(it.key()).dump() + ": ";
      write(it.value(), depth + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

}  // namespace d4::io

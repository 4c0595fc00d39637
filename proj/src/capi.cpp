#include "delaunay4/delaunay4.h"

#include <sstream>
#include <string>

#include "delaunay4/io.hpp"

struct d4_report {
  std::string json;
  bool passed = true;
};

struct d4_form {
  d4::QuadraticForm form;
};

namespace {

thread_local std::string last_error;

d4_status status_of(d4::ErrorKind k) {
  using d4::ErrorKind;
  switch (k) {
    case ErrorKind::parse: return D4_ERR_PARSE;
    case ErrorKind::invalid_argument: return D4_ERR_INVALID_ARGUMENT;
    case ErrorKind::dimension_mismatch: return D4_ERR_DIMENSION_MISMATCH;
    case ErrorKind::singular: return D4_ERR_SINGULAR;
    case ErrorKind::not_cospherical: return D4_ERR_NOT_COSPHERICAL;
    case ErrorKind::not_positive_definite: return D4_ERR_NOT_POSITIVE_DEFINITE;
    case ErrorKind::unknown_name: return D4_ERR_UNKNOWN_NAME;
    case ErrorKind::not_a_refinement: return D4_ERR_NOT_A_REFINEMENT;
    case ErrorKind::internal: break;
  }
  return D4_ERR_INTERNAL;
}

// Runs f, converting exceptions to a status and recording the message.
template <class F>
d4_status guarded(F&& f) {
  try {
    f();
    return D4_OK;
  } catch (const d4::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return D4_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return D4_ERR_INTERNAL;
  }
}

d4_status emit(d4_report** out, const nlohmann::json& j, bool passed, d4_status s = D4_OK) {
  *out = new d4_report{d4::io::dump(j), passed};
  return s;
}

bool null_arg(const void* p, const char* what) {
  if (p) return false;
  last_error = std::string(what) + " is null";
  return true;
}

std::vector<d4::Rational> parse_weights(const std::string& text) {
  std::vector<d4::Rational> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(d4::parse_rational(item));
  return w;
}

}  // namespace

extern "C" {

const char* d4_last_error(void) { return last_error.c_str(); }

const char* d4_status_name(d4_status s) {
  switch (s) {
    case D4_OK: return "ok";
    case D4_ERR_PARSE: return "parse";
    case D4_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case D4_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case D4_ERR_SINGULAR: return "singular";
    case D4_ERR_NOT_COSPHERICAL: return "not_cospherical";
    case D4_ERR_NOT_POSITIVE_DEFINITE: return "not_positive_definite";
    case D4_ERR_UNKNOWN_NAME: return "unknown_name";
    case D4_ERR_NOT_A_REFINEMENT: return "not_a_refinement";
    case D4_ERR_INTERNAL: break;
  }
  return "internal";
}

d4_status d4_form_parse(const char* json, d4_form** out) {
  if (null_arg(json, "json") || null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new d4_form{d4::io::form_from_json(d4::io::parse_text(json, "form"))}; });
}

int d4_form_rank(const d4_form* f) { return f ? static_cast<int>(f->form.rank()) : 0; }

void d4_form_free(d4_form* f) { delete f; }

d4_status d4_star(const d4_form* f, int mod_translation, d4_report** out) {
  if (null_arg(f, "form") || null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto star = d4::delaunay_star(f->form);
    emit(out, mod_translation ? d4::io::to_json_mod_translation(star) : d4::io::to_json(star), true);
  });
}

d4_status d4_catalog_list(d4_report** out) {
  if (null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] { emit(out, d4::io::catalog_to_json(), true); });
}

d4_status d4_catalog_show(const char* name, d4_report** out) {
  if (null_arg(name, "name") || null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto& cone = d4::catalog(name);
    auto j = d4::io::to_json(cone);
    if (cone.ambient_rank == 4)
      if (auto face = d4::k_face_of(cone)) j["k_face_drop_set"] = d4::to_string(*face);
    emit(out, j, true);
  });
}

d4_status d4_sample(const char* cone, const char* weights, d4_report** out) {
  if (null_arg(cone, "cone") || null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto& c = d4::catalog(cone);
    auto b = weights ? d4::sample_interior(c, parse_weights(weights)) : d4::sample_interior(c);
    emit(out, d4::io::to_json(b), true);
  });
}

d4_status d4_fuse(const char* coarse, const char* fine, d4_report** out) {
  if (null_arg(coarse, "coarse") || null_arg(fine, "fine") || null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto r = d4::fusion_check(d4::catalog(coarse), d4::catalog(fine));
    emit(out, d4::io::to_json(r), r.ok());
  });
}

d4_status d4_gen(const char* cell_json, const d4_form* f, const char* pieces_json, d4_report** out) {
  if (null_arg(cell_json, "cell") || null_arg(f, "form") || null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto cell = d4::io::cell_from_json(d4::io::parse_text(cell_json, "cell"));
    if (cell.rank() != f->form.rank())
      throw d4::Error(d4::ErrorKind::dimension_mismatch, "cell rank " + std::to_string(cell.rank()) +
                                                             " differs from form rank " +
                                                             std::to_string(f->form.rank()));
    cell = d4::make_cell(f->form, cell.vertices);
    const auto cert = d4::certify_cell(f->form, cell);
    d4::GenerationReport report;
    if (pieces_json) {
      auto pieces = d4::io::cells_from_json(d4::io::parse_text(pieces_json, "pieces"));
      for (const auto& p : pieces)
        if (p.rank() != cell.rank())
          throw d4::Error(d4::ErrorKind::dimension_mismatch, "piece " + d4::to_string(p) + " has the wrong rank");
      report = d4::is_simplicially_generating(cell, pieces);
    } else {
      report = d4::is_totally_generating(cell);
    }
    auto j = d4::io::to_json(report);
    j["cell"] = d4::io::to_json(cell);
    j["delaunay_cell"] = cert.passed();
    if (cert.error) j["certificate_error"] = *cert.error;
    emit(out, j, cert.passed());
  });
}

d4_status d4_table(int which, d4_report** out) {
  if (null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    if (which != 1 && which != 2) throw d4::Error(d4::ErrorKind::invalid_argument, "table must be 1 or 2");
    auto d = d4::reproduce_table(which);
    emit(out, d4::io::to_json(d), d.ok());
  });
}

d4_status d4_faces(d4_report** out) {
  if (null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] { emit(out, d4::io::faces_report(), true); });
}

d4_status d4_verify(const char* suite, d4_report** out) {
  if (null_arg(suite, "suite") || null_arg(out, "out")) return D4_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto reports = d4::run_suite(suite);
    nlohmann::json j = nlohmann::json::array();
    bool pass = true;
    for (const auto& r : reports) {
      j.push_back(d4::io::to_json(r));
      pass = pass && r.pass;
    }
    emit(out, reports.size() == 1 ? j[0] : j, pass);
  });
}

const char* d4_report_json(const d4_report* r) { return r ? r->json.c_str() : ""; }

int d4_report_passed(const d4_report* r) { return r && r->passed ? 1 : 0; }

void d4_report_free(d4_report* r) { delete r; }

}  // extern "C"

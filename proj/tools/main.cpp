// d4: command-line front end over the C interface.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 usage or input
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "delaunay4/delaunay4.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Throws InputError carrying the library's message, prefixed by `origin`.
void check(d4_status s, const std::string& origin = {}) {
  if (s == D4_OK) return;
  std::string msg = std::string(d4_status_name(s)) + ": " + d4_last_error();
  throw InputError{origin.empty() ? msg : origin + ": " + msg};
}

using FormPtr = std::unique_ptr<d4_form, decltype(&d4_form_free)>;
using ReportPtr = std::unique_ptr<d4_report, decltype(&d4_report_free)>;

FormPtr load_form(const std::string& path) {
  d4_form* f = nullptr;
  check(d4_form_parse(read_file(path).c_str(), &f), path);
  return FormPtr(f, d4_form_free);
}

int emit(d4_report* raw, const std::string& output) {
  ReportPtr r(raw, d4_report_free);
  if (output.empty() || output == "-") {
    std::fputs(d4_report_json(r.get()), stdout);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw InputError{output + ": cannot write file"};
    out << d4_report_json(r.get());
  }
  return d4_report_passed(r.get()) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delaunay decompositions of quaternary forms and their fusions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "Write the report here instead of standard output");

  std::string form_path, cell_path, pieces_path, cone, weights, coarse, fine, suite = "all";
  std::string action, name;
  bool mod_translation = false;
  int which = 0;

  auto* del = app.add_subcommand("del", "Delaunay star of 0 for a form");
  del->add_option("--form", form_path, "Form file")->required();
  del->add_flag("--mod-translation", mod_translation, "Only one cell per translation orbit");

  auto* cat = app.add_subcommand("catalog", "Named Voronoi cones");
  cat->add_option("action", action, "list or show")->required()->check(CLI::IsMember({"list", "show"}));
  cat->add_option("name", name, "Cone name for show");

  auto* sample = app.add_subcommand("sample", "Interior form of a named cone");
  sample->add_option("--cone", cone, "Cone name")->required();
  auto* weights_opt = sample->add_option("--weights", weights, "Positive weights w1,w2,...");

  auto* fuse = app.add_subcommand("fuse", "Fusion of cells from a cone onto its face");
  fuse->add_option("--coarse", coarse, "Face cone name")->required();
  fuse->add_option("--fine", fine, "Refining cone name")->required();

  auto* gen = app.add_subcommand("gen", "Total and simplicial generation of a cell");
  gen->add_option("--cell", cell_path, "Cell file")->required();
  gen->add_option("--form", form_path, "Form file")->required();
  auto* pieces_opt = gen->add_option("--pieces", pieces_path, "Refining pieces file");

  auto* tables = app.add_subcommand("tables", "Reproduce a fusion table");
  tables->add_option("--which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

  auto* faces = app.add_subcommand("faces", "Codimension-one faces of the perfect cone");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "all, dim2, dim3, dim4, tables, faces, theorem or properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    d4_report* r = nullptr;
    if (*del) {
      auto f = load_form(form_path);
      check(d4_star(f.get(), mod_translation ? 1 : 0, &r), form_path);
    } else if (*cat) {
      if (action == "list") {
        if (!name.empty()) throw InputError{"catalog list takes no name"};
        check(d4_catalog_list(&r));
      } else {
        if (name.empty()) throw InputError{"catalog show needs a cone name"};
        check(d4_catalog_show(name.c_str(), &r));
      }
    } else if (*sample) {
      check(d4_sample(cone.c_str(), *weights_opt ? weights.c_str() : nullptr, &r));
    } else if (*fuse) {
      check(d4_fuse(coarse.c_str(), fine.c_str(), &r));
    } else if (*gen) {
      auto f = load_form(form_path);
      const std::string cell = read_file(cell_path);
      std::optional<std::string> pieces;
      if (*pieces_opt) pieces = read_file(pieces_path);
      check(d4_gen(cell.c_str(), f.get(), pieces ? pieces->c_str() : nullptr, &r), cell_path);
    } else if (*tables) {
      check(d4_table(which, &r));
    } else if (*faces) {
      check(d4_faces(&r));
    } else if (*verify) {
      check(d4_verify(suite.c_str(), &r));
    }
    return emit(r, output);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  }
}

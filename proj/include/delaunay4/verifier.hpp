#pragma once

// End-to-end checks: fusion across cone faces, the two fusion tables, the
// low-dimensional pictures and the simplicial-generation theorems.

#include <memory>
#include <string>
#include <vector>

#include "delaunay4/catalog.hpp"
#include "delaunay4/delaunay.hpp"

namespace d4 {

/// delaunay_star memoized per form for the lifetime of the process.
std::shared_ptr<const DelaunayStar> cached_star(const QuadraticForm& b);

/// Every translate of a fine orbit representative lying inside `coarse`
/// (vertex-set containment), sorted.
std::vector<DelaunayCell> pieces_in(const DelaunayCell& coarse, const std::vector<DelaunayCell>& fine_reps);

struct Fusion {
  DelaunayCell coarse;               // coarse orbit representative
  std::vector<DelaunayCell> pieces;  // fine cells inside it
};

struct FusionReport {
  std::string coarse_cone;
  std::string fine_cone;
  std::vector<Fusion> fusions;         // coarse cells made of two or more pieces
  std::vector<DelaunayCell> unchanged; // coarse cells that are fine cells
  bool volume_conserved = true;
  bool pieces_disjoint = true;
  bool each_fine_once = true;
  std::vector<std::string> notes;

  bool ok() const { return volume_conserved && pieces_disjoint && each_fine_once; }
};

FusionReport fusion_check(const std::string& coarse_name, const QuadraticForm& coarse_form,
                          const std::string& fine_name, const QuadraticForm& fine_form);
/// Uses the all-ones interior samples.
FusionReport fusion_check(const NamedCone& coarse, const NamedCone& fine);

/// sigma_abcd = <0, s_a, s_ab, s_abc, s_1234>.
DelaunayCell sigma_cell(int a, int b, int c, int d);

/// "sigma_abcd" when the cell is a translate of one, otherwise the translate
/// with coordinatewise minimum 0 written as <0,s1,s12,...>.
std::string display_name(const DelaunayCell& cell);

/// Parses "sigma_1234", "<0,s1,s12>" or "<s1,s2,s12,s123,s1234>".
DelaunayCell parse_cell_name(const std::string& text, std::size_t rank);

struct TableRow {
  std::string no;
  std::string left;
  std::vector<std::string> middle;  // union parts; empty on a continuation row
  std::string right;
};

struct TableDiff {
  int which = 1;
  std::string left_cone, middle_cone, right_cone;
  std::vector<TableRow> expected;
  std::vector<TableRow> computed;
  std::vector<std::string> mismatches;  // one per failing expected row
  std::vector<std::string> unmatched;   // computed cells no row accounts for

  bool ok() const { return mismatches.empty() && unmatched.empty(); }
};

/// Rows as printed, first row of each group carrying the union.
std::vector<TableRow> expected_table(int which);

/// Diff of the computed fusion picture against `expected`.
TableDiff diff_table(int which, const std::vector<TableRow>& expected);
TableDiff reproduce_table(int which);

struct Check {
  std::string name;
  bool pass = false;
  std::string info;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<Check> details;

  void add(std::string name, bool ok, std::string info = {});
};

SuiteReport verify_lowdim_dim2();  // includes the rank-1 sanity check
SuiteReport verify_lowdim_dim3();
SuiteReport verify_dim4();         // top cones, identities, chambers
SuiteReport verify_tables();
SuiteReport verify_faces();
SuiteReport verify_main_theorem();
SuiteReport verify_properties();

/// all, dim2, dim3, dim4, tables, faces, theorem, properties. Throws
/// Error{unknown_name}.
std::vector<SuiteReport> run_suite(const std::string& name);
const std::vector<std::string>& suite_names();

}  // namespace d4

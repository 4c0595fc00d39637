#include "delaunay4/verifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "delaunay4/faces.hpp"
#include "delaunay4/generation.hpp"
#include "delaunay4/geometry.hpp"

namespace d4 {

namespace {

std::string form_key(const QuadraticForm& b) {
  std::string key = std::to_string(b.rank());
  for (const auto& x : b.upper_coords()) key += " " + format_rational(x);
  return key;
}

bool subset_of(const DelaunayCell& inner, const DelaunayCell& outer) {
  return std::includes(outer.vertices.begin(), outer.vertices.end(), inner.vertices.begin(), inner.vertices.end());
}

std::set<DelaunayCell> canonical_set(const std::vector<DelaunayCell>& cells) {
  std::set<DelaunayCell> out;
  for (const auto& c : cells) out.insert(canonical_orbit_rep(c));
  return out;
}

std::string join_names(const std::vector<DelaunayCell>& cells, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? sep : "") + display_name(cells[k]);
  return out;
}

bool same_cells(const std::vector<DelaunayCell>& a, std::initializer_list<DelaunayCell> b) {
  return std::set<DelaunayCell>(a.begin(), a.end()) == std::set<DelaunayCell>(b);
}

Rational cell_volume(const DelaunayCell& c) { return normalized_volume(to_rational(c.vertices)); }

DelaunayCell cell_of(std::size_t g, std::initializer_list<std::vector<int>> index_sets) {
  std::vector<LatticeVector> v;
  for (const auto& s : index_sets) v.push_back(LatticeVector::basis_sum(g, std::span<const int>(s)));
  return make_cell(std::move(v));
}

std::shared_ptr<const DelaunayStar> star_of(const std::string& cone, bool alt = false) {
  const auto& c = catalog(cone);
  return cached_star(alt ? sample_interior_alt(c) : sample_interior(c));
}

std::string count_info(std::size_t got, std::size_t want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

// Parts of the printed tables. Row 19 of the second table prints a stray
// comma in its V3 cell; the cell is read without it.
const std::vector<TableRow>& table1_rows() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> r = {
        {"1", "sigma_1234", {"sigma_1234", "sigma_2134"}, "<0,s1,s2,s123,s1234>"},
        {"2", "sigma_2134", {}, "<s1,s2,s12,s123,s1234>"},
        {"3", "sigma_1243", {"sigma_1243", "sigma_2143"}, "<0,s1,s2,s124,s1234>"},
        {"4", "sigma_2143", {}, "<s1,s2,s12,s124,s1234>"},
        {"5", "sigma_3124", {"sigma_3124", "sigma_3214"}, "<0,s3,s13,s23,s1234>"},
        {"6", "sigma_3214", {}, "<0,s13,s23,s123,s1234>"},
        {"7", "sigma_4123", {"sigma_4123", "sigma_4213"}, "<0,s4,s14,s24,s1234>"},
        {"8", "sigma_4213", {}, "<0,s14,s24,s124,s1234>"},
        {"9", "sigma_3412", {"sigma_3412", "sigma_3421"}, "<0,s3,s34,s134,s234>"},
        {"10", "sigma_3421", {}, "<0,s3,s134,s234,s1234>"},
        {"11", "sigma_4312", {"sigma_4312", "sigma_4321"}, "<0,s4,s34,s134,s234>"},
        {"12", "sigma_4321", {}, "<0,s4,s134,s234,s1234>"},
    };
    const char* same[] = {"1324", "1423", "2314", "2413", "1342", "1432",
                          "2341", "2431", "3142", "4132", "3241", "4231"};
    int no = 13;
    for (const char* s : same) {
      std::string name = std::string("sigma_") + s;
      r.push_back({std::to_string(no++), name, {name}, name});
    }
    return r;
  }();
  return rows;
}

const std::vector<TableRow>& table2_rows() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> r = {
        {"2", "<s1,s2,s12,s123,s1234>", {"<s1,s2,s12,s123,s1234>", "<s1,s2,s12,s124,s1234>"}, "<s1,s2,s12,s123,s124>"},
        {"4", "<s1,s2,s12,s124,s1234>", {}, "<s1,s2,s123,s124,s1234>"},
        {"9", "<0,s3,s34,s134,s234>", {"<0,s3,s34,s134,s234>", "<0,s4,s34,s134,s234>"}, "<0,s3,s4,s134,s234>"},
        {"11", "<0,s4,s34,s134,s234>", {}, "<s3,s4,s34,s134,s234>"},
        {"17", "sigma_1342", {"sigma_1342", "sigma_1432"}, "<0,s1,s13,s14,s1234>"},
        {"18", "sigma_1432", {}, "<0,s13,s14,s134,s1234>"},
        {"19", "sigma_2341", {"sigma_2341", "sigma_2431"}, "<0,s2,s23,s24,s1234>"},
        {"20", "sigma_2431", {}, "<0,s23,s24,s234,s1234>"},
    };
    const std::pair<const char*, const char*> same[] = {
        {"1", "<0,s1,s2,s123,s1234>"},   {"3", "<0,s1,s2,s124,s1234>"},    {"5", "<0,s3,s13,s23,s1234>"},
        {"6", "<0,s13,s23,s123,s1234>"}, {"7", "<0,s4,s14,s24,s1234>"},    {"8", "<0,s14,s24,s124,s1234>"},
        {"10", "<0,s3,s134,s234,s1234>"}, {"12", "<0,s4,s134,s234,s1234>"}, {"13", "sigma_1324"},
        {"14", "sigma_1423"},            {"15", "sigma_2314"},             {"16", "sigma_2413"},
        {"21", "sigma_3142"},            {"22", "sigma_4132"},             {"23", "sigma_3241"},
        {"24", "sigma_4231"},
    };
    for (const auto& [no, cell] : same) r.push_back({no, cell, {cell}, cell});
    return r;
  }();
  return rows;
}

}  // namespace

std::shared_ptr<const DelaunayStar> cached_star(const QuadraticForm& b) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const DelaunayStar>> cache;
  const std::string key = form_key(b);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto star = std::make_shared<const DelaunayStar>(delaunay_star(b));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(star)).first->second;
}

std::vector<DelaunayCell> pieces_in(const DelaunayCell& coarse, const std::vector<DelaunayCell>& fine_reps) {
  std::set<DelaunayCell> out;
  for (const auto& f : fine_reps) {
    if (f.vertices.size() > coarse.vertices.size()) continue;
    for (const auto& v : coarse.vertices)
      for (const auto& w : f.vertices) {
        DelaunayCell t = f.translated(v - w);
        if (subset_of(t, coarse)) out.insert(make_cell(t.vertices));
      }
  }
  return {out.begin(), out.end()};
}

FusionReport fusion_check(const std::string& coarse_name, const QuadraticForm& coarse_form,
                          const std::string& fine_name, const QuadraticForm& fine_form) {
  FusionReport report;
  report.coarse_cone = coarse_name;
  report.fine_cone = fine_name;
  const auto coarse = cached_star(coarse_form);
  const auto fine = cached_star(fine_form);
  std::map<DelaunayCell, int> placements;
  for (const auto& f : fine->orbit_reps) placements[f] = 0;

  for (const auto& c : coarse->orbit_reps) {
    auto pieces = pieces_in(c, fine->orbit_reps);
    for (const auto& p : pieces) ++placements[canonical_orbit_rep(p)];
    if (pieces.size() == 1 && pieces.front() == c) {
      report.unchanged.push_back(c);
      continue;
    }
    if (pieces.empty()) {
      report.volume_conserved = false;
      report.notes.push_back(display_name(c) + " contains no fine cell");
      continue;
    }
    Rational sum = 0;
    for (const auto& p : pieces) sum += cell_volume(p);
    if (sum != cell_volume(c)) {
      report.volume_conserved = false;
      report.notes.push_back("volume of " + display_name(c) + " is " + format_rational(cell_volume(c)) +
                             ", pieces sum to " + format_rational(sum));
    }
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j)
        if (!interiors_disjoint(to_rational(pieces[i].vertices), to_rational(pieces[j].vertices))) {
          report.pieces_disjoint = false;
          report.notes.push_back(display_name(pieces[i]) + " and " + display_name(pieces[j]) + " overlap");
        }
    report.fusions.push_back({c, std::move(pieces)});
  }
  for (const auto& [f, n] : placements)
    if (n != 1) {
      report.each_fine_once = false;
      report.notes.push_back(display_name(f) + " lies in " + std::to_string(n) + " coarse cells");
    }
  return report;
}

FusionReport fusion_check(const NamedCone& coarse, const NamedCone& fine) {
  return fusion_check(coarse.name, sample_interior(coarse), fine.name, sample_interior(fine));
}

DelaunayCell sigma_cell(int a, int b, int c, int d) {
  return cell_of(4, {{}, {a}, {a, b}, {a, b, c}, {a, b, c, d}});
}

std::string display_name(const DelaunayCell& cell) {
  if (cell.rank() == 4 && cell.vertices.size() == 5) {
    const DelaunayCell canon = canonical_orbit_rep(cell);
    std::array<int, 4> p{1, 2, 3, 4};
    do {
      if (canonical_orbit_rep(sigma_cell(p[0], p[1], p[2], p[3])) == canon)
        return "sigma_" + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]) + std::to_string(p[3]);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  if (cell.vertices.empty()) return "<>";
  const std::size_t g = cell.rank();
  LatticeVector low = cell.vertices.front();
  for (const auto& v : cell.vertices)
    for (std::size_t i = 0; i < g; ++i) low[i] = std::min(low[i], v[i]);
  std::vector<std::pair<std::size_t, std::string>> names;
  for (const auto& v : cell.vertices) {
    LatticeVector s = v - low;
    std::string idx;
    bool binary = true;
    for (std::size_t i = 0; i < g; ++i) {
      if (s[i] == 1) idx += std::to_string(i + 1);
      else if (s[i] != 0) binary = false;
    }
    if (!binary) return to_string(cell);
    names.push_back({idx.size(), idx.empty() ? "0" : "s" + idx});
  }
  std::sort(names.begin(), names.end());
  std::string out = "<";
  for (std::size_t k = 0; k < names.size(); ++k) out += (k ? "," : "") + names[k].second;
  return out + ">";
}

DelaunayCell parse_cell_name(const std::string& text, std::size_t rank) {
  auto bad = [&] { return Error(ErrorKind::parse, "cannot read cell name '" + text + "'"); };
  if (text.rfind("sigma_", 0) == 0) {
    const std::string digits = text.substr(6);
    if (digits.size() != 4 || rank != 4) throw bad();
    std::array<int, 4> p{};
    for (int k = 0; k < 4; ++k) p[k] = digits[k] - '0';
    std::array<int, 4> check = p;
    std::sort(check.begin(), check.end());
    if (check != std::array<int, 4>{1, 2, 3, 4}) throw bad();
    return sigma_cell(p[0], p[1], p[2], p[3]);
  }
  if (text.size() < 2 || text.front() != '<' || text.back() != '>') throw bad();
  std::vector<LatticeVector> verts;
  std::stringstream in(text.substr(1, text.size() - 2));
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token == "0") {
      verts.emplace_back(rank);
      continue;
    }
    if (token.size() < 2 || token[0] != 's') throw bad();
    std::vector<int> idx;
    for (char ch : token.substr(1)) {
      int i = ch - '0';
      if (i < 1 || i > static_cast<int>(rank)) throw bad();
      idx.push_back(i);
    }
    verts.push_back(LatticeVector::basis_sum(rank, std::span<const int>(idx)));
  }
  if (verts.empty()) throw bad();
  return make_cell(std::move(verts));
}

std::vector<TableRow> expected_table(int which) {
  if (which == 1) return table1_rows();
  if (which == 2) return table2_rows();
  throw Error(ErrorKind::invalid_argument, "tables are numbered 1 and 2");
}

TableDiff diff_table(int which, const std::vector<TableRow>& expected) {
  TableDiff diff;
  diff.which = which;
  if (which == 1) {
    diff.left_cone = "dim4.V1";
    diff.middle_cone = "dim4.V1capV2";
    diff.right_cone = "dim4.V2";
  } else if (which == 2) {
    diff.left_cone = "dim4.V2";
    diff.middle_cone = "dim4.V2capV3";
    diff.right_cone = "dim4.V3";
  } else {
    throw Error(ErrorKind::invalid_argument, "tables are numbered 1 and 2");
  }
  diff.expected = expected;
  const auto left = star_of(diff.left_cone);
  const auto middle = star_of(diff.middle_cone);
  const auto right = star_of(diff.right_cone);

  // Group rows by their union cell; continuation rows join the group above.
  struct Group {
    std::vector<std::size_t> rows;
    std::optional<DelaunayCell> coarse;  // absolute, as printed
  };
  std::vector<Group> groups;
  for (std::size_t r = 0; r < expected.size(); ++r) {
    if (!expected[r].middle.empty() || groups.empty()) {
      Group g;
      if (!expected[r].middle.empty()) {
        std::vector<LatticeVector> verts;
        for (const auto& part : expected[r].middle) {
          auto c = parse_cell_name(part, 4);
          verts.insert(verts.end(), c.vertices.begin(), c.vertices.end());
        }
        g.coarse = make_cell(std::move(verts));
      }
      groups.push_back(std::move(g));
    }
    groups.back().rows.push_back(r);
  }

  std::set<DelaunayCell> matched_coarse;
  for (const auto& g : groups) {
    std::vector<DelaunayCell> lefts, rights;
    std::optional<DelaunayCell> canon;
    if (g.coarse) {
      canon = canonical_orbit_rep(*g.coarse);
      if (std::binary_search(middle->orbit_reps.begin(), middle->orbit_reps.end(), *canon)) {
        lefts = pieces_in(*g.coarse, left->orbit_reps);
        rights = pieces_in(*g.coarse, right->orbit_reps);
        matched_coarse.insert(*canon);
      } else {
        canon.reset();
      }
    }
    std::set<DelaunayCell> listed_left, listed_right;
    for (auto r : g.rows) {
      const auto& row = expected[r];
      std::vector<std::string> why;
      if (!canon) why.push_back("middle cell is not a " + diff.middle_cone + " cell");
      DelaunayCell l, rt;
      try {
        l = parse_cell_name(row.left, 4);
        rt = parse_cell_name(row.right, 4);
      } catch (const Error& e) {
        diff.mismatches.push_back("row " + row.no + ": " + e.what());
        continue;
      }
      listed_left.insert(l);
      listed_right.insert(rt);
      if (canon) {
        if (!std::binary_search(lefts.begin(), lefts.end(), l))
          why.push_back(row.left + " is not a " + diff.left_cone + " cell inside the middle cell");
        if (!std::binary_search(rights.begin(), rights.end(), rt))
          why.push_back(row.right + " is not a " + diff.right_cone + " cell inside the middle cell");
      }
      if (!why.empty()) {
        std::string msg = "row " + row.no + ":";
        for (std::size_t k = 0; k < why.size(); ++k) msg += (k ? ";" : "") + std::string(" ") + why[k];
        diff.mismatches.push_back(msg);
      }
      TableRow computed{row.no, "?", {}, "?"};
      if (canon && std::binary_search(lefts.begin(), lefts.end(), l)) computed.left = display_name(l);
      if (canon && std::binary_search(rights.begin(), rights.end(), rt)) computed.right = display_name(rt);
      if (r == g.rows.front() && canon) {
        for (const auto& p : lefts) computed.middle.push_back(display_name(p));
      }
      diff.computed.push_back(std::move(computed));
    }
    if (canon) {
      for (const auto& p : lefts)
        if (!listed_left.count(p))
          diff.unmatched.push_back(diff.left_cone + " cell " + display_name(p) + " inside " + display_name(*g.coarse) +
                                   " is not listed");
      for (const auto& p : rights)
        if (!listed_right.count(p)) {
          diff.unmatched.push_back(diff.right_cone + " cell " + display_name(p) + " inside " +
                                   display_name(*g.coarse) + " is not listed");
          diff.computed.push_back({"-", "", {}, display_name(p)});
        }
    }
  }
  for (const auto& c : middle->orbit_reps)
    if (!matched_coarse.count(c)) {
      diff.unmatched.push_back(diff.middle_cone + " cell " + display_name(c) + " is not listed");
      diff.computed.push_back({"-", join_names(pieces_in(c, left->orbit_reps), " u "), {display_name(c)},
                               join_names(pieces_in(c, right->orbit_reps), " u ")});
    }
  return diff;
}

TableDiff reproduce_table(int which) { return diff_table(which, expected_table(which)); }

void SuiteReport::add(std::string name, bool ok, std::string info) {
  pass = pass && ok;
  details.push_back({std::move(name), ok, std::move(info)});
}

SuiteReport verify_lowdim_dim2() {
  SuiteReport r{"dim2", true, {}};
  {
    auto star = star_of("dim1.V");
    r.add("dim 1: orbit reps = {[0,1]}",
          star->orbit_reps == std::vector<DelaunayCell>{cell_of(1, {{}, {1}})} && star->cells.size() == 2,
          std::to_string(star->cells.size()) + " cells");
  }
  const DelaunayCell s1 = cell_of(2, {{}, {1}, {1, 2}});
  const DelaunayCell s2 = cell_of(2, {{}, {2}, {1, 2}});
  const DelaunayCell s3 = cell_of(2, {{}, {1}, {2}});
  const DelaunayCell s4 = cell_of(2, {{1}, {2}, {1, 2}});
  const DelaunayCell s5 = cell_of(2, {{}, {1}, {2}, {1, 2}});
  auto reps = [](std::initializer_list<DelaunayCell> cells) {
    auto s = canonical_set(std::vector<DelaunayCell>(cells));
    return std::vector<DelaunayCell>(s.begin(), s.end());
  };
  for (bool alt : {false, true}) {
    const std::string tag = alt ? " (weights 1,2,3)" : "";
    r.add("Del_V1 = {σ1, σ2}" + tag, star_of("dim2.V1", alt)->orbit_reps == reps({s1, s2}));
    r.add("Del_V2 = {σ3, σ4}" + tag, star_of("dim2.V2", alt)->orbit_reps == reps({s3, s4}));
    r.add("Del_V1capV2 = {σ5}" + tag, star_of("dim2.V1capV2", alt)->orbit_reps == reps({s5}));
  }
  r.add("σ5 = σ1 ∪ σ2", same_cells(pieces_in(s5, star_of("dim2.V1")->orbit_reps), {s1, s2}));
  r.add("σ5 = σ3 ∪ σ4", same_cells(pieces_in(s5, star_of("dim2.V2")->orbit_reps), {s3, s4}));
  for (const char* fine : {"dim2.V1", "dim2.V2"}) {
    auto rep = fusion_check(catalog("dim2.V1capV2"), catalog(fine));
    r.add(std::string("fusion dim2.V1capV2 <- ") + fine + ": volume conserved, one coarse cell per fine cell",
          rep.ok() && rep.fusions.size() == 1);
  }
  r.add("C(0,σ5) = C(0,σ3)", cone_cover_check(s5, {s3, s4}));
  r.add("0 ∉ σ4", !s4.contains_origin());
  {
    auto g = is_simplicially_generating(s5, {s3, s4});
    r.add("σ5 simplicially generating by {σ3, σ4}, decomposition {σ3}",
          g.simplicially_generating.value_or(false) && g.decomposition == std::vector<DelaunayCell>{s3});
    auto h = is_simplicially_generating(s5, {s1, s2});
    r.add("σ5 simplicially generating by {σ1, σ2}", h.simplicially_generating.value_or(false) &&
                                                       same_cells(h.decomposition, {s1, s2}));
  }
  return r;
}

SuiteReport verify_lowdim_dim3() {
  SuiteReport r{"dim3", true, {}};
  std::set<DelaunayCell> want;
  std::array<int, 3> p{1, 2, 3};
  do {
    want.insert(canonical_orbit_rep(cell_of(3, {{}, {p[0]}, {p[0], p[1]}, {p[0], p[1], p[2]}})));
  } while (std::next_permutation(p.begin(), p.end()));
  for (bool alt : {false, true}) {
    auto star = star_of("dim3.V", alt);
    std::set<DelaunayCell> got(star->orbit_reps.begin(), star->orbit_reps.end());
    r.add(std::string("Del_V orbit reps = the 6 simplices σ_ijk") + (alt ? " (weights 1..6)" : ""), got == want,
          count_info(got.size(), 6));
    r.add(std::string("every rep is a basic simplex") + (alt ? " (weights 1..6)" : ""),
          std::all_of(got.begin(), got.end(), is_basic_simplex));
  }
  return r;
}

SuiteReport verify_dim4() {
  SuiteReport r{"dim4", true, {}};
  std::set<DelaunayCell> sigmas;
  std::array<int, 4> p{1, 2, 3, 4};
  do {
    sigmas.insert(canonical_orbit_rep(sigma_cell(p[0], p[1], p[2], p[3])));
  } while (std::next_permutation(p.begin(), p.end()));
  for (const char* cone : {"dim4.V1", "dim4.V2", "dim4.V3", "dim4.V4"}) {
    auto star = star_of(cone);
    bool basic = std::all_of(star->orbit_reps.begin(), star->orbit_reps.end(),
                             [](const DelaunayCell& c) { return c.vertices.size() == 5 && is_basic_simplex(c); });
    r.add(std::string(cone) + ": 24 orbit reps, 120 cells at 0, all basic simplices",
          basic && star->orbit_reps.size() == 24 && star->cells.size() == 120,
          std::to_string(star->orbit_reps.size()) + " reps, " + std::to_string(star->cells.size()) + " cells");
  }
  {
    auto star = star_of("dim4.V1");
    std::set<DelaunayCell> got(star->orbit_reps.begin(), star->orbit_reps.end());
    r.add("dim4.V1 reps are exactly the σ_abcd", got == sigmas);
  }
  for (const auto& id : verify_matrix_identities()) r.add(id.name, id.holds, id.detail);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      if (a == b) continue;
      std::string abcd = std::to_string(a) + std::to_string(b);
      for (int k = 1; k <= 4; ++k)
        if (k != a && k != b) abcd += std::to_string(k);
      const std::string cdab = abcd.substr(2) + abcd.substr(0, 2);
      bool ok = chamber_side(abcd, named_form(4, "e" + abcd + "5")) == ChamberSide::first &&
                chamber_side(abcd, named_form(4, "e" + cdab + "5")) == ChamberSide::second &&
                chamber_side(abcd, named_form(4, "f" + abcd)) == ChamberSide::boundary;
      r.add("chamber sides in G" + abcd + ": e" + abcd + "5 in F" + abcd + ", f" + abcd + " on the boundary", ok);
    }
  {
    const auto& k = catalog("dim4.K");
    auto m = contains(k, named_form(4, "e12345"));
    QuadraticForm third = sample_interior(k, std::vector<Rational>(k.generators.size(), Rational(1, 3)));
    r.add("ω ∈ K, and all coefficients 1/3 reconstruct ω", m.member && third == named_form(4, "e12345"));
    r.add("-e15 ∉ V1", !contains(catalog("dim4.V1"), named_form(4, "e15").scaled(-1)).member);
    bool gens_in = true;
    for (const auto& c : catalog_entries())
      for (const auto& g : c.generators) gens_in = gens_in && contains(c, g).member;
    r.add("every catalog generator lies in its cone", gens_in);
  }
  return r;
}

SuiteReport verify_tables() {
  SuiteReport r{"tables", true, {}};
  for (int which : {1, 2}) {
    auto d = reproduce_table(which);
    std::string info = std::to_string(d.expected.size()) + " rows, " + std::to_string(d.mismatches.size()) +
                       " mismatches, " + std::to_string(d.unmatched.size()) + " unmatched";
    for (const auto& m : d.mismatches) info += "; " + m;
    for (const auto& m : d.unmatched) info += "; " + m;
    r.add("Table " + std::to_string(which) + " reproduced exactly", d.ok() && d.expected.size() == 24, info);
  }
  {
    // Negative control: one corrupted row must surface as one mismatch.
    auto rows = expected_table(1);
    rows[12].right = "sigma_1234";
    auto d = diff_table(1, rows);
    r.add("corrupted Table 1 row 13 gives exactly one mismatch", d.mismatches.size() == 1,
          d.mismatches.empty() ? "" : d.mismatches.front());
  }
  {
    std::map<std::string, int> fused;
    auto d = reproduce_table(2);
    for (const auto& row : expected_table(2))
      if (row.middle.size() > 1) ++fused[row.no];
    r.add("Table 2 fuses row pairs {2,4}, {9,11}, {17,18}, {19,20}", fused.size() == 4 && d.ok());
  }
  return r;
}

SuiteReport verify_faces() {
  SuiteReport r{"faces", true, {}};
  const auto faces = enumerate_faces();
  int tri = 0, fork = 0;
  for (const auto& f : faces) {
    tri += f.graph.shape() == GraphShape::triangle;
    fork += f.graph.shape() == GraphShape::fork;
  }
  r.add("64 certified codim-1 faces of K", faces.size() == 64, std::to_string(faces.size()));
  r.add("32 triangle graphs and 32 fork graphs", tri == 32 && fork == 32,
        std::to_string(tri) + " triangles, " + std::to_string(fork) + " forks");
  const auto group = group_G();
  r.add("|G| = 1152", group.size() == 1152, std::to_string(group.size()));
  const auto oc = orbit_classify(faces, group);
  r.add("orbits BF = 48, RT = 16", oc.bf.size() == 48 && oc.rt.size() == 16,
        std::to_string(oc.bf.size()) + " + " + std::to_string(oc.rt.size()));
  {
    bool bij = true;
    std::set<SignedPair> images;
    for (const auto& g : catalog("dim4.K").generators) {
      auto s = identify_signed_pair(voronoi_transform(g));
      bij = bij && s.has_value();
      if (s) images.insert(*s);
    }
    r.add("Voronoi transformation maps the 12 K generators onto the 12 forms (x_i ± x_j)²", bij && images.size() == 12);
    r.add("(x1 - x2)² becomes 4 x2²", voronoi_transform(named_form(4, "e12")) ==
                                          QuadraticForm{{0, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  }
  const DropSet w0_expected{SignedPair{1, 3, true}, SignedPair{1, 4, true}, SignedPair{3, 4, false}};
  auto w0 = k_face_of(catalog("dim4.W0"));
  r.add("W0 drops (x1+x3)², (x1+x4)², (x3-x4)²", w0 && *w0 == w0_expected, w0 ? to_string(*w0) : "not a face");
  if (w0) {
    Matrix tau1 = Matrix::identity(4);
    tau1(0, 0) = -1;
    auto image = act(tau1, *w0);
    auto g = graph_of(image);
    bool red = g.shape() == GraphShape::triangle &&
               std::all_of(g.edges.begin(), g.edges.end(), [](const ColoredEdge& e) { return e.red; });
    r.add("τ1(W0) is a red triangle, W0 is RT", red && classify_type(*w0, oc) == VoronoiType::III, to_string(image));
  }
  auto v12 = k_face_of(catalog("dim4.V1capV2"));
  const DropSet v12_expected{SignedPair{1, 3, true}, SignedPair{1, 4, true}, SignedPair{3, 4, true}};
  r.add("V1capV2 is the black triangle on 1, 3, 4 and lies in BF",
        v12 && *v12 == v12_expected && classify_type(*v12, oc) == VoronoiType::II);
  for (const auto& [cone, want] : {std::pair<const char*, VoronoiType>{"dim4.V2", VoronoiType::II},
                                   {"dim4.V3", VoronoiType::III},
                                   {"dim4.V4", VoronoiType::III}}) {
    auto face = k_face_of(catalog(cone));
    bool ok = face && classify_type(*face, oc) == want;
    r.add(std::string(cone) + " is of type " + to_string(want), ok,
          face ? "face " + to_string(*face) : "no K face among its generators");
  }
  {
    const DropSet path{SignedPair{1, 2, true}, SignedPair{2, 3, true}, SignedPair{3, 4, true}};
    r.add("a path-shaped drop set has no facial certificate",
          graph_of(path).shape() == GraphShape::path && !facial_certificate(path));
  }
  return r;
}

SuiteReport verify_main_theorem() {
  SuiteReport r{"theorem", true, {}};
  for (const char* cone : {"dim4.V1", "dim4.V2", "dim4.V3", "dim4.V4"}) {
    auto star = star_of(cone);
    bool basic = std::all_of(star->orbit_reps.begin(), star->orbit_reps.end(), is_basic_simplex);
    bool total = std::all_of(star->cells.begin(), star->cells.end(),
                             [](const DelaunayCell& c) { return is_totally_generating(c).totally_generating; });
    r.add(std::string(cone) + ": every cell a basic simplex, totally generating; nilpotency = 1",
          basic && total && star->orbit_reps.size() == 24);
  }
  const std::pair<const char*, std::vector<const char*>> faces[] = {
      {"dim4.V1capV2", {"dim4.V1", "dim4.V2"}},
      {"dim4.V2capV3", {"dim4.V2", "dim4.V3"}},
      {"dim4.W0", {"dim4.V3", "dim4.V4"}},
  };
  const std::size_t want_reps[] = {18, 20, 20};
  std::size_t k = 0;
  for (const auto& [face, tops] : faces) {
    auto star = star_of(face);
    r.add(std::string(face) + ": " + std::to_string(want_reps[k]) + " orbit reps",
          star->orbit_reps.size() == want_reps[k], std::to_string(star->orbit_reps.size()));
    ++k;
    for (const char* top : tops) {
      auto fine = star_of(top);
      std::size_t failures = 0;
      std::string first;
      for (const auto& cell : star->cells) {
        auto pieces = pieces_in(cell, fine->orbit_reps);
        auto g = is_simplicially_generating(cell, pieces);
        if (!g.simplicially_generating.value_or(false)) {
          ++failures;
          if (first.empty()) first = display_name(cell);
        }
      }
      r.add(std::string(face) + ": every cell at 0 simplicially generating with pieces from " + top +
                "; nilpotency = 1",
            failures == 0,
            std::to_string(star->cells.size()) + " cells" + (failures ? ", first failure " + first : ""));
    }
  }
  return r;
}

SuiteReport verify_properties() {
  SuiteReport r{"properties", true, {}};
  const char* voronoi_cones[] = {"dim1.V",       "dim2.V1",   "dim2.V2",      "dim2.V1capV2", "dim3.V",
                                 "dim4.V1",      "dim4.V1capV2", "dim4.V2",   "dim4.V2capV3", "dim4.V3",
                                 "dim4.V4",      "dim4.W0",   "dim4.F13",     "dim4.F14",     "dim4.F23",
                                 "dim4.F24",     "dim4.F34"};
  for (const char* cone : voronoi_cones) {
    auto a = star_of(cone, false);
    auto b = star_of(cone, true);
    std::size_t bad = 0, cells = 0;
    for (const auto& s : {a, b})
      for (const auto& c : s->cells) {
        ++cells;
        auto cert = certify_cell(s->form, c);
        if (!cert.passed()) ++bad;
      }
    r.add(std::string(cone) + ": every cell passes its empty-sphere certificate", bad == 0,
          std::to_string(cells) + " cells checked under two samples");
    r.add(std::string(cone) + ": identical orbit reps under two interior samples", a->orbit_reps == b->orbit_reps,
          std::to_string(a->orbit_reps.size()) + " vs " + std::to_string(b->orbit_reps.size()));
  }
  const std::pair<const char*, const char*> fusions[] = {
      {"dim2.V1capV2", "dim2.V1"}, {"dim2.V1capV2", "dim2.V2"}, {"dim4.V1capV2", "dim4.V1"},
      {"dim4.V1capV2", "dim4.V2"}, {"dim4.V2capV3", "dim4.V2"}, {"dim4.V2capV3", "dim4.V3"},
      {"dim4.W0", "dim4.V3"},      {"dim4.W0", "dim4.V4"},
  };
  for (const auto& [coarse, fine] : fusions)
    for (bool alt : {false, true}) {
      const auto& c = catalog(coarse);
      const auto& f = catalog(fine);
      auto rep = alt ? fusion_check(c.name, sample_interior_alt(c), f.name, sample_interior_alt(f))
                     : fusion_check(c, f);
      std::string info = std::to_string(rep.fusions.size()) + " fusions, " + std::to_string(rep.unchanged.size()) +
                         " unchanged";
      for (const auto& n : rep.notes) info += "; " + n;
      r.add(std::string("fusion ") + coarse + " <- " + fine + (alt ? " (weights 1,2,3,...)" : "") +
                ": volume conserved, disjoint pieces, each fine cell in one coarse cell",
            rep.ok(), info);
    }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "dim2", "dim3", "dim4", "tables", "faces", "theorem", "properties"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name) {
  if (name == "dim2") return {verify_lowdim_dim2()};
  if (name == "dim3") return {verify_lowdim_dim3()};
  if (name == "dim4") return {verify_dim4()};
  if (name == "tables") return {verify_tables()};
  if (name == "faces") return {verify_faces()};
  if (name == "theorem") return {verify_main_theorem()};
  if (name == "properties") return {verify_properties()};
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names())
      if (n != "all") out.push_back(run_suite(n).front());
    return out;
  }
  throw Error(ErrorKind::unknown_name, "unknown suite '" + name + "'");
}

}  // namespace d4

#include "delaunay4/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "delaunay4/geometry.hpp"

namespace d4 {

namespace {

// Matrices exactly as printed.
const QuadraticForm& omega_printed() {
  static const QuadraticForm m{{2, 1, -1, -1}, {1, 2, -1, -1}, {-1, -1, 2, 0}, {-1, -1, 0, 2}};
  return m;
}
const QuadraticForm& f1234_printed() {
  static const QuadraticForm m{{1, 1, -1, -1}, {1, 1, -1, -1}, {-1, -1, 1, 1}, {-1, -1, 1, 1}};
  return m;
}
const QuadraticForm& g123_printed() {
  static const QuadraticForm m{{1, 1, -1, 0}, {1, 1, -1, 0}, {-1, -1, 1, 0}, {0, 0, 0, 0}};
  return m;
}
const QuadraticForm& g124_printed() {
  static const QuadraticForm m{{1, 1, 0, -1}, {1, 1, 0, -1}, {0, 0, 0, 0}, {-1, -1, 0, 1}};
  return m;
}

// Rank-2 generators. e13 is diag(1,0): it is the x1^2 generator of the
// rank-2 family, and the sample and identity checks depend on it.
QuadraticForm rank2_form(std::string_view label) {
  if (label == "e13") return QuadraticForm{{1, 0}, {0, 0}};
  if (label == "e23") return QuadraticForm{{0, 0}, {0, 1}};
  if (label == "e12") return QuadraticForm{{1, -1}, {-1, 1}};
  if (label == "f12") return QuadraticForm{{1, 1}, {1, 1}};
  throw Error(ErrorKind::unknown_name, "unknown rank-2 generator '" + std::string(label) + "'");
}

// e_ij with i < j <= g is (x_i - x_j)^2; e_i,g+1 is x_i^2.
QuadraticForm pair_form(std::size_t g, int i, int j) {
  Matrix m(g, g);
  if (j == static_cast<int>(g) + 1) {
    m(i - 1, i - 1) = 1;
  } else {
    m(i - 1, i - 1) = 1;
    m(j - 1, j - 1) = 1;
    m(i - 1, j - 1) = -1;
    m(j - 1, i - 1) = -1;
  }
  return QuadraticForm(m);
}

// Relabels a printed 1234 matrix for the index order abcd: entry (a,b) of the
// result is entry (1,2) of the source, and so on.
QuadraticForm relabel(const QuadraticForm& src, const std::array<int, 4>& abcd) {
  Matrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(abcd[i] - 1, abcd[j] - 1) = src(i, j);
  return QuadraticForm(m);
}

std::optional<std::array<int, 4>> parse_split(std::string_view s) {
  if (s.size() != 4) return std::nullopt;
  std::array<int, 4> out{};
  std::set<int> seen;
  for (int k = 0; k < 4; ++k) {
    int d = s[k] - '0';
    if (d < 1 || d > 4 || !seen.insert(d).second) return std::nullopt;
    out[k] = d;
  }
  return out;
}

std::string pair_label(int i, int j) { return "e" + std::to_string(i) + std::to_string(j); }

// All e_ij labels of rank g: pairs i < j <= g+1.
std::vector<std::string> all_pairs(std::size_t g) {
  std::vector<std::string> out;
  for (int i = 1; i <= static_cast<int>(g); ++i)
    for (int j = i + 1; j <= static_cast<int>(g) + 1; ++j) out.push_back(pair_label(i, j));
  return out;
}

std::vector<std::string> pairs_except(std::size_t g, std::initializer_list<std::string> skip) {
  std::vector<std::string> out;
  for (auto& l : all_pairs(g))
    if (std::find(skip.begin(), skip.end(), l) == skip.end()) out.push_back(l);
  return out;
}

std::string sorted_pair(int a, int b) { return pair_label(std::min(a, b), std::max(a, b)); }

NamedCone make(std::string name, std::size_t g, std::vector<std::string> labels) {
  NamedCone c;
  c.name = std::move(name);
  c.ambient_rank = g;
  for (const auto& l : labels) c.generators.push_back(named_form(g, l));
  c.labels = std::move(labels);
  return c;
}

std::vector<NamedCone> build_catalog() {
  std::vector<NamedCone> out;
  out.push_back(make("dim1.V", 1, {"e12"}));
  out.push_back(make("dim2.V1", 2, {"e13", "e23", "e12"}));
  out.push_back(make("dim2.V2", 2, {"e13", "e23", "f12"}));
  out.push_back(make("dim2.V1capV2", 2, {"e13", "e23"}));
  out.push_back(make("dim3.V", 3, all_pairs(3)));

  auto with = [](std::vector<std::string> base, std::initializer_list<std::string> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
  };
  const auto no12 = pairs_except(4, {"e12"});
  const auto no12_34 = pairs_except(4, {"e12", "e34"});
  out.push_back(make("dim4.V1", 4, all_pairs(4)));
  out.push_back(make("dim4.V1capV2", 4, no12));
  out.push_back(make("dim4.V2", 4, with(no12, {"e12345"})));
  out.push_back(make("dim4.V2capV3", 4, with(no12_34, {"e12345"})));
  out.push_back(make("dim4.V3", 4, with(no12_34, {"e12345", "f1234"})));
  out.push_back(make("dim4.V4", 4, with(no12_34, {"e34125", "f1234"})));
  out.push_back(make("dim4.W0", 4, with(no12_34, {"f1234"})));
  out.push_back(make("dim4.K", 4, with(no12, {"g123", "g124", "f1234"})));

  // F_ab for every pair; G_abcd for the three splits, as V3 cup V4.
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      std::vector<int> rest;
      for (int k = 1; k <= 4; ++k)
        if (k != a && k != b) rest.push_back(k);
      std::string abcd = std::to_string(a) + std::to_string(b) + std::to_string(rest[0]) + std::to_string(rest[1]);
      out.push_back(make("dim4.F" + std::to_string(a) + std::to_string(b), 4,
                         with(pairs_except(4, {pair_label(a, b)}), {"e" + abcd + "5"})));
    }
  for (std::string abcd : {"1234", "1324", "1423"}) {
    std::string cdab = abcd.substr(2) + abcd.substr(0, 2);
    auto base = pairs_except(4, {sorted_pair(abcd[0] - '0', abcd[1] - '0'), sorted_pair(abcd[2] - '0', abcd[3] - '0')});
    out.push_back(make("dim4.G" + abcd, 4, with(base, {"e" + abcd + "5", "e" + cdab + "5", "f" + abcd})));
  }
  return out;
}

// Coordinates inside the span of a set of vectors, through a fixed basis.
class SpanCoordinates {
 public:
  explicit SpanCoordinates(const std::vector<RationalVector>& vectors) {
    std::vector<RationalVector> chosen;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      chosen.push_back(vectors[k]);
      if (linear_rank(chosen) == chosen.size()) basis_.push_back(k);
      else chosen.pop_back();
    }
    basis_vectors_ = chosen;
    const std::size_t n = vectors.front().size();
    // Rows of the basis matrix that form an invertible square block.
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < n && rows.size() < chosen.size(); ++r) {
      RationalVector row;
      for (const auto& v : chosen) row.push_back(v[r]);
      rows.push_back(row);
      if (linear_rank(rows) == rows.size()) pivot_rows_.push_back(r);
      else rows.pop_back();
    }
    block_ = Matrix::from_rows(rows);
  }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }

  std::optional<RationalVector> coordinates(const RationalVector& x) const {
    RationalVector rhs;
    for (auto r : pivot_rows_) rhs.push_back(x[r]);
    RationalVector c = solve_linear(block_, rhs);
    RationalVector back(x.size());
    for (std::size_t k = 0; k < c.size(); ++k) back = back + c[k] * basis_vectors_[k];
    if (back != x) return std::nullopt;
    return c;
  }

 private:
  std::vector<std::size_t> basis_;
  std::vector<RationalVector> basis_vectors_;
  std::vector<std::size_t> pivot_rows_;
  Matrix block_;
};

std::vector<RationalVector> upper_coords(const std::vector<QuadraticForm>& forms) {
  std::vector<RationalVector> out;
  for (const auto& f : forms) out.push_back(f.upper_coords());
  return out;
}

QuadraticForm sum_forms(const std::vector<QuadraticForm>& forms, std::size_t g) {
  QuadraticForm total = QuadraticForm::zero(g);
  for (const auto& f : forms) total = total + f;
  return total;
}

}  // namespace

std::size_t NamedCone::dimension() const { return linear_rank(upper_coords(generators)); }

const std::vector<NamedCone>& catalog_entries() {
  static const std::vector<NamedCone> entries = build_catalog();
  return entries;
}

const NamedCone& catalog(std::string_view name) {
  for (const auto& c : catalog_entries())
    if (c.name == name) return c;
  throw Error(ErrorKind::unknown_name, "unknown cone '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& c : catalog_entries()) out.push_back(c.name);
  return out;
}

QuadraticForm named_form(std::size_t rank, std::string_view label) {
  const std::string l(label);
  auto unknown = [&] { return Error(ErrorKind::unknown_name, "unknown rank-" + std::to_string(rank) + " generator '" + l + "'"); };
  if (rank == 2) return rank2_form(label);
  if (rank == 4) {
    if (l == "g123") return g123_printed();
    if (l == "g124") return g124_printed();
    if (l.size() == 6 && l[0] == 'e' && l[5] == '5') {
      auto split = parse_split(std::string_view(l).substr(1, 4));
      if (!split) throw unknown();
      return relabel(omega_printed(), *split);
    }
    if (l.size() == 5 && l[0] == 'f') {
      auto split = parse_split(std::string_view(l).substr(1, 4));
      if (!split) throw unknown();
      return relabel(f1234_printed(), *split);
    }
  }
  if (l.size() == 3 && l[0] == 'e') {
    int i = l[1] - '0', j = l[2] - '0';
    if (i >= 1 && i < j && j <= static_cast<int>(rank) + 1) return pair_form(rank, i, j);
  }
  throw unknown();
}

QuadraticForm sample_interior(const NamedCone& cone, const std::vector<Rational>& weights) {
  if (weights.size() != cone.generators.size())
    throw Error(ErrorKind::invalid_argument, cone.name + " has " + std::to_string(cone.generators.size()) +
                                                 " generators, got " + std::to_string(weights.size()) + " weights");
  QuadraticForm total = QuadraticForm::zero(cone.ambient_rank);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0) throw Error(ErrorKind::invalid_argument, "weights must be strictly positive");
    total = total + cone.generators[k].scaled(weights[k]);
  }
  return total;
}

QuadraticForm sample_interior(const NamedCone& cone) {
  return sample_interior(cone, std::vector<Rational>(cone.generators.size(), Rational(1)));
}

QuadraticForm sample_interior_alt(const NamedCone& cone) {
  std::vector<Rational> w;
  for (std::size_t k = 0; k < cone.generators.size(); ++k) w.emplace_back(static_cast<long>(k + 1));
  return sample_interior(cone, w);
}

Membership contains(const NamedCone& cone, const QuadraticForm& b) {
  if (b.rank() != cone.ambient_rank) throw Error(ErrorKind::dimension_mismatch, "contains: rank mismatch");
  const auto gens = upper_coords(cone.generators);
  SpanCoordinates span(gens);
  auto target = span.coordinates(b.upper_coords());
  if (!target) return {};
  std::vector<RationalVector> local;
  for (const auto& v : gens) local.push_back(*span.coordinates(v));
  if (!in_cone(cone_facets(local), *target)) return {};

  // Caratheodory: some basis subset carries a nonnegative solution.
  const std::size_t d = span.dimension();
  std::optional<std::vector<Rational>> witness;
  for_each_subset(local.size(), d, [&](const std::vector<std::size_t>& idx) {
    Matrix m(d, d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) m(r, c) = local[idx[c]][r];
    if (determinant(m) == 0) return true;
    RationalVector x = solve_linear(m, *target);
    if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v < 0; })) return true;
    std::vector<Rational> coeffs(local.size());
    for (std::size_t c = 0; c < d; ++c) coeffs[idx[c]] = x[c];
    witness = std::move(coeffs);
    return false;
  });
  if (!witness) throw Error(ErrorKind::internal, "contains: facet test passed but no basis solution");
  return {true, std::move(witness)};
}

bool forms_sum_equal(const std::vector<QuadraticForm>& lhs, const std::vector<QuadraticForm>& rhs) {
  if (lhs.empty() || rhs.empty()) return lhs.empty() && rhs.empty();
  const std::size_t g = lhs.front().rank();
  return sum_forms(lhs, g) == sum_forms(rhs, g);
}

std::vector<IdentityCheck> verify_matrix_identities() {
  std::vector<IdentityCheck> out;
  auto forms = [](const std::vector<std::string>& labels) {
    std::vector<QuadraticForm> v;
    for (const auto& l : labels) v.push_back(named_form(4, l));
    return v;
  };
  {
    auto rhs = forms(pairs_except(4, {"e12"}));
    for (const auto& f : forms({"f1234", "g123", "g124"})) rhs.push_back(f);
    QuadraticForm third = sum_forms(rhs, 4).scaled(Rational(1, 3));
    out.push_back({"omega = 1/3 (sum e_ij (ij != 12) + f1234 + g123 + g124)", third == omega_printed(),
                   "omega is e12345 as printed"});
  }
  {
    auto rhs = forms(pairs_except(4, {"e12", "e34"}));
    rhs.push_back(f1234_printed());
    bool ok = forms_sum_equal(forms({"e12345", "e34125"}), rhs);
    out.push_back({"e12345 + e34125 = f1234 + sum e_ij (ij != 12, 34)", ok, "exact matrix equality"});
  }
  {
    const auto& v3 = catalog("dim4.V3");
    const auto& v4 = catalog("dim4.V4");
    const auto& w0 = catalog("dim4.W0");
    std::set<std::string> common;
    for (const auto& l : v3.labels)
      if (std::find(v4.labels.begin(), v4.labels.end(), l) != v4.labels.end()) common.insert(l);
    std::set<std::string> w(w0.labels.begin(), w0.labels.end());
    out.push_back({"V3 cap V4 = W0 (shared generators)", common == w,
                   std::to_string(common.size()) + " shared generators"});
  }
  {
    const auto& f12 = catalog("dim4.F12");
    const auto& v2 = catalog("dim4.V2");
    std::set<std::string> a(f12.labels.begin(), f12.labels.end()), b(v2.labels.begin(), v2.labels.end());
    out.push_back({"F12 = V2 (generator sets)", a == b, "F12 is listed as the Voronoi cone V2"});
  }
  {
    bool ok = forms_sum_equal({rank2_form("e12"), rank2_form("f12")},
                              {rank2_form("e13").scaled(2), rank2_form("e23").scaled(2)});
    out.push_back({"dim 2: e12 + f12 = 2 (e13 + e23)", ok, "exact matrix equality"});
  }
  return out;
}

ChamberCoordinates chamber_coordinates(std::string_view split, const QuadraticForm& b) {
  auto s = parse_split(split);
  if (!s) throw Error(ErrorKind::invalid_argument, "split must be a permutation of 1234, got '" + std::string(split) + "'");
  if (b.rank() != 4) throw Error(ErrorKind::dimension_mismatch, "chamber coordinates need a rank-4 form");
  const auto [a, bb, c, d] = *s;
  ChamberCoordinates out;
  out.split = std::string(split);
  out.labels = pairs_except(4, {sorted_pair(a, bb), sorted_pair(c, d)});
  const std::string abcd(split);
  const std::string cdab = abcd.substr(2) + abcd.substr(0, 2);
  out.labels.push_back("e" + abcd + "5");
  out.labels.push_back("e" + cdab + "5");
  Matrix m(10, 10);
  for (std::size_t k = 0; k < 10; ++k) {
    auto u = named_form(4, out.labels[k]).upper_coords();
    for (std::size_t r = 0; r < 10; ++r) m(r, k) = u[r];
  }
  out.coefficients = solve_linear(m, b.upper_coords());
  out.y_ab = out.coefficients[8];
  out.y_cd = out.coefficients[9];
  return out;
}

ChamberSide chamber_side(std::string_view split, const QuadraticForm& b) {
  const auto y = chamber_coordinates(split, b);
  const Rational low = std::min(y.y_ab, y.y_cd);
  if (low < 0) return ChamberSide::outside;
  for (std::size_t k = 0; k < 8; ++k)
    if (y.coefficients[k] + low < 0) return ChamberSide::outside;
  if (y.y_ab > y.y_cd) return ChamberSide::first;
  if (y.y_ab < y.y_cd) return ChamberSide::second;
  return ChamberSide::boundary;
}

std::string to_string(ChamberSide side, std::string_view split) {
  const std::string abcd(split);
  switch (side) {
    case ChamberSide::first: return "F" + abcd;
    case ChamberSide::second: return "F" + abcd.substr(2) + abcd.substr(0, 2);
    case ChamberSide::boundary: return "boundary";
    case ChamberSide::outside: return "outside";
  }
  return "outside";
}

}  // namespace d4

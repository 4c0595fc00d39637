#include "delaunay4/generation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "delaunay4/geometry.hpp"

namespace d4 {

namespace {

std::vector<LatticeVector> nonzero_vertices(const DelaunayCell& cell) {
  std::vector<LatticeVector> out;
  for (const auto& v : cell.vertices)
    if (!v.is_zero()) out.push_back(v);
  return out;
}

LatticeVector primitive(const LatticeVector& v) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < v.rank(); ++i) g = std::gcd(g, v[i]);
  if (g == 0) return v;
  LatticeVector out(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) out[i] = v[i] / g;
  return out;
}

void require_origin_full(const DelaunayCell& cell, const char* what) {
  if (!cell.contains_origin()) throw Error(ErrorKind::invalid_argument, std::string(what) + ": 0 is not a vertex");
  if (cell.dim != static_cast<int>(cell.rank()))
    throw Error(ErrorKind::invalid_argument, std::string(what) + ": cell is not full-dimensional");
}

// Sum of inward facet normals: integral and strictly positive on every
// nonzero point of a pointed full-dimensional cone.
RationalVector grading(const std::vector<RationalVector>& facets, std::size_t g) {
  RationalVector h(g);
  for (const auto& n : facets) h = h + n;
  return h;
}

// Simplicial subcones of C(0,cell): the simplices through 0 of a placing
// triangulation of the cell, origin placed first.
std::vector<std::vector<LatticeVector>> subcones(const DelaunayCell& cell) {
  std::vector<LatticeVector> order{LatticeVector(cell.rank())};
  for (const auto& v : nonzero_vertices(cell)) order.push_back(v);
  std::vector<std::vector<LatticeVector>> out;
  for (const auto& simplex : placing_triangulation(to_rational(order))) {
    if (simplex.front() != 0) continue;
    std::vector<LatticeVector> rays;
    for (std::size_t k = 1; k < simplex.size(); ++k) rays.push_back(order[simplex[k]]);
    out.push_back(std::move(rays));
  }
  return out;
}

// |det R| / prod h(r): proportional to the cross-section volume of the
// simplicial cone on R at height h = 1.
Rational section_measure(const std::vector<LatticeVector>& rays, const RationalVector& h) {
  Rational m = abs(determinant(Matrix::from_lattice_rows(rays)));
  for (const auto& r : rays) m /= dot(h, d4::to_rational(r));
  return m;
}

}  // namespace

ConeAtZero cone_rays(const DelaunayCell& cell) {
  if (!cell.contains_origin()) throw Error(ErrorKind::invalid_argument, "cone_rays: 0 is not a vertex");
  const std::size_t g = cell.rank();
  ConeAtZero out;
  out.lattice_points = cell.vertices;
  std::set<LatticeVector> dirs;
  for (const auto& v : nonzero_vertices(cell)) dirs.insert(primitive(v));
  std::vector<LatticeVector> candidates(dirs.begin(), dirs.end());
  if (candidates.empty()) return out;
  auto gens = to_rational(candidates);
  if (linear_rank(gens) < g) {
    // Lower-dimensional cone: only handled for a single ray direction.
    if (candidates.size() == 1) out.rays = candidates;
    else throw Error(ErrorKind::invalid_argument, "cone_rays: cell is not full-dimensional");
    return out;
  }
  auto facets = cone_facets(gens);
  for (const auto& c : candidates) {
    std::vector<RationalVector> tight;
    for (const auto& n : facets)
      if (dot(n, d4::to_rational(c)) == 0) tight.push_back(n);
    if (linear_rank(tight) + 1 == g) out.rays.push_back(c);
  }
  return out;
}

std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& rays) {
  if (rays.empty()) throw Error(ErrorKind::invalid_argument, "parallelepiped_points: no rays");
  const std::size_t g = rays.front().rank();
  if (rays.size() != g) throw Error(ErrorKind::singular, "parallelepiped_points: need exactly g rays");
  Matrix columns = Matrix::from_lattice_rows(rays).transpose();  // x = columns * lambda
  if (determinant(columns) == 0) throw Error(ErrorKind::singular, "parallelepiped_points: dependent rays");
  Matrix inv = inverse(columns);
  LatticeVector lo(g), hi(g);
  for (const auto& r : rays)
    for (std::size_t i = 0; i < g; ++i) {
      if (r[i] < 0) lo[i] += r[i];
      if (r[i] > 0) hi[i] += r[i];
    }
  std::vector<LatticeVector> out;
  LatticeVector x = lo;
  while (true) {
    RationalVector lambda = inv * d4::to_rational(x);
    if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& l) { return l >= 0 && l < 1; }))
      out.push_back(x);
    std::size_t i = 0;
    while (i < g && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == g) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_semigroup(const std::vector<LatticeVector>& generators, const LatticeVector& x) {
  if (x.is_zero()) return true;
  if (generators.empty()) return false;
  const std::size_t g = x.rank();
  auto gens = to_rational(generators);
  auto facets = cone_facets(gens);
  if (!in_cone(facets, d4::to_rational(x))) return false;
  RationalVector h = grading(facets, g);

  std::set<LatticeVector> dead;
  std::function<bool(const LatticeVector&)> search = [&](const LatticeVector& r) {
    if (r.is_zero()) return true;
    if (dead.count(r)) return false;
    for (const auto& u : generators) {
      LatticeVector next = r - u;
      RationalVector nr = d4::to_rational(next);
      if (dot(h, nr) < 0 || !in_cone(facets, nr)) continue;
      if (search(next)) return true;
    }
    dead.insert(r);
    return false;
  };
  return search(x);
}

GenerationReport is_totally_generating(const DelaunayCell& cell) {
  require_origin_full(cell, "is_totally_generating");
  GenerationReport report;
  const auto gens = nonzero_vertices(cell);
  std::optional<LatticeVector> witness;
  for (const auto& rays : subcones(cell)) {
    for (const auto& p : parallelepiped_points(rays)) {
      if (p.is_zero() || in_semigroup(gens, p)) continue;
      if (!witness || p < *witness) witness = p;
    }
  }
  report.totally_generating = !witness.has_value();
  report.witness = witness;
  if (witness) report.notes.push_back("lattice point " + to_string(*witness) + " of C(0,cell) is not in the semigroup");
  return report;
}

bool cone_cover_check(const DelaunayCell& coarse, const std::vector<DelaunayCell>& pieces) {
  require_origin_full(coarse, "cone_cover_check");
  const std::size_t g = coarse.rank();
  std::vector<DelaunayCell> at_zero;
  for (const auto& p : pieces)
    if (p.contains_origin()) at_zero.push_back(p);
  if (at_zero.empty()) return false;

  const auto coarse_facets = cone_facets(to_rational(nonzero_vertices(coarse)));
  const RationalVector h = grading(coarse_facets, g);

  // C(0, piece) within C(0, coarse).
  for (const auto& p : at_zero) {
    if (p.dim != static_cast<int>(g)) return false;
    for (const auto& v : nonzero_vertices(p))
      if (!in_cone(coarse_facets, d4::to_rational(v))) return false;
  }
  // Disjoint cone interiors, then equal cross-section volume: the union is
  // closed and fills C(0, coarse) up to measure zero, hence entirely.
  for (std::size_t i = 0; i < at_zero.size(); ++i)
    for (std::size_t j = i + 1; j < at_zero.size(); ++j)
      if (!cone_interiors_disjoint(to_rational(nonzero_vertices(at_zero[i])),
                                   to_rational(nonzero_vertices(at_zero[j]))))
        return false;
  Rational coarse_measure = 0;
  for (const auto& rays : subcones(coarse)) coarse_measure += section_measure(rays, h);
  Rational piece_measure = 0;
  for (const auto& p : at_zero)
    for (const auto& rays : subcones(p)) piece_measure += section_measure(rays, h);
  if (coarse_measure != piece_measure) return false;

  // Lattice sweep of C(0, coarse) up to twice the largest vertex height.
  // Every such point is p + sum n_i v_i for a simplicial subcone on rays v_i
  // and a parallelepiped point p, so walking those is exhaustive.
  Rational top = 0;
  for (const auto& v : nonzero_vertices(coarse)) top = std::max(top, dot(h, d4::to_rational(v)));
  const Rational bound = 2 * top;
  std::vector<std::vector<RationalVector>> piece_facets;
  for (const auto& p : at_zero) piece_facets.push_back(cone_facets(to_rational(nonzero_vertices(p))));
  auto covered = [&](const RationalVector& x) {
    return std::any_of(piece_facets.begin(), piece_facets.end(),
                       [&](const std::vector<RationalVector>& f) { return in_cone(f, x); });
  };
  for (const auto& rays : subcones(coarse)) {
    std::vector<Rational> heights;
    for (const auto& r : rays) heights.push_back(dot(h, d4::to_rational(r)));
    for (const auto& p : parallelepiped_points(rays)) {
      bool ok = true;
      std::function<void(std::size_t, const RationalVector&, const Rational&)> walk =
          [&](std::size_t k, const RationalVector& x, const Rational& height) {
            if (!ok) return;
            if (k == rays.size()) {
              if (!covered(x)) ok = false;
              return;
            }
            RationalVector y = x;
            Rational hy = height;
            const RationalVector step = d4::to_rational(rays[k]);
            while (hy <= bound && ok) {
              walk(k + 1, y, hy);
              y = y + step;
              hy += heights[k];
            }
          };
      RationalVector start = d4::to_rational(p);
      walk(0, start, dot(h, start));
      if (!ok) return false;
    }
  }
  return true;
}

GenerationReport is_simplicially_generating(const DelaunayCell& cell, const std::vector<DelaunayCell>& pieces) {
  require_origin_full(cell, "is_simplicially_generating");
  const std::size_t g = cell.rank();
  for (const auto& p : pieces) {
    if (p.rank() != g || p.dim != static_cast<int>(g))
      throw Error(ErrorKind::not_a_refinement, "piece " + to_string(p) + " is not full-dimensional");
    for (const auto& v : p.vertices)
      if (!cell.contains_vertex(v))
        throw Error(ErrorKind::not_a_refinement, "piece " + to_string(p) + " has a vertex outside the cell");
  }
  GenerationReport report = is_totally_generating(cell);
  std::set<DelaunayCell> selected;
  for (const auto& p : pieces)
    if (p.contains_origin()) selected.insert(p);
  report.decomposition.assign(selected.begin(), selected.end());

  bool ok = !selected.empty();
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (pieces[i] == pieces[j]) continue;
      if (!interiors_disjoint(to_rational(pieces[i].vertices), to_rational(pieces[j].vertices))) {
        report.notes.push_back("pieces " + to_string(pieces[i]) + " and " + to_string(pieces[j]) + " overlap");
        ok = false;
      }
    }
  for (const auto& p : report.decomposition) {
    if (!is_totally_generating(p).totally_generating) {
      report.notes.push_back("piece " + to_string(p) + " is not totally generating");
      ok = false;
    }
  }
  if (!cone_cover_check(cell, pieces)) {
    report.notes.push_back("cones over the pieces do not cover C(0,cell)");
    ok = false;
  }
  report.simplicially_generating = ok;
  return report;
}

}  // namespace d4

#include "delaunay4/delaunay.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "delaunay4/geometry.hpp"

namespace d4 {

bool DelaunayCell::contains_vertex(const LatticeVector& v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool DelaunayCell::contains_origin() const { return !vertices.empty() && contains_vertex(LatticeVector(rank())); }

DelaunayCell DelaunayCell::translated(const LatticeVector& shift) const {
  DelaunayCell out;
  out.dim = dim;
  out.vertices.reserve(vertices.size());
  for (const auto& v : vertices) out.vertices.push_back(v + shift);
  std::sort(out.vertices.begin(), out.vertices.end());
  if (center) out.center = *center + d4::to_rational(shift);
  out.sq_radius = sq_radius;
  return out;
}

DelaunayCell make_cell(std::vector<LatticeVector> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  DelaunayCell cell;
  cell.dim = affine_dimension(vertices);
  cell.vertices = std::move(vertices);
  return cell;
}

DelaunayCell make_cell(const QuadraticForm& b, std::vector<LatticeVector> vertices) {
  DelaunayCell cell = make_cell(std::move(vertices));
  if (cell.dim == static_cast<int>(b.rank())) {
    try {
      auto [c, r2] = cell_center(b, cell.vertices);
      cell.center = std::move(c);
      cell.sq_radius = std::move(r2);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_cospherical && e.kind() != ErrorKind::singular) throw;
    }
  }
  return cell;
}

std::string to_string(const DelaunayCell& cell) {
  std::string s = "<";
  for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
    if (i) s += ",";
    s += to_string(cell.vertices[i]);
  }
  return s + ">";
}

std::vector<LatticeVector> nearest_points(const QuadraticForm& b, const RationalVector& alpha) {
  if (alpha.size() != b.rank()) throw Error(ErrorKind::dimension_mismatch, "nearest_points: rank mismatch");
  if (definiteness(b) != Definiteness::positive_definite)
    throw Error(ErrorKind::not_positive_definite, "nearest_points: form is not positive definite");
  // Any lattice point bounds the minimum; the rounded point is a cheap one.
  RationalVector rounded(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), alpha[i].get_num_mpz_t(), alpha[i].get_den_mpz_t());
    rounded[i] = Rational(fl);
  }
  RationalVector diff = rounded - alpha;
  Rational bound = b.evaluate(diff, diff);
  auto candidates = enumerate_ellipsoid(b, alpha, bound);
  std::vector<LatticeVector> best;
  std::optional<Rational> best_dist;
  for (const auto& x : candidates) {
    RationalVector y = d4::to_rational(x) - alpha;
    Rational dist = b.evaluate(y, y);
    if (!best_dist || dist < *best_dist) {
      best_dist = dist;
      best.clear();
    }
    if (dist == *best_dist) best.push_back(x);
  }
  return best;
}

std::pair<RationalVector, Rational> cell_center(const QuadraticForm& b, const std::vector<LatticeVector>& vertices) {
  const std::size_t g = b.rank();
  if (vertices.empty()) throw Error(ErrorKind::singular, "cell_center: no vertices");
  for (const auto& v : vertices)
    if (v.rank() != g) throw Error(ErrorKind::dimension_mismatch, "cell_center: vertex rank mismatch");
  const LatticeVector& base = vertices.front();

  // Relative to `base`: B(w, w) = 2 B(w, c') for every w = v - base.
  std::vector<RationalVector> rows;
  RationalVector rhs;
  std::vector<RationalVector> chosen;
  std::vector<LatticeVector> rest;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    LatticeVector w = vertices[i] - base;
    RationalVector wr = d4::to_rational(w);
    chosen.push_back(wr);
    if (chosen.size() <= g && linear_rank(chosen) == chosen.size()) {
      rows.push_back(Rational(2) * b.apply(wr));
      rhs.push_back(b.norm(w));
    } else {
      chosen.pop_back();
      rest.push_back(w);
    }
  }
  if (rows.size() != g) throw Error(ErrorKind::singular, "cell_center: vertices are not full-dimensional");
  RationalVector rel = solve_linear(Matrix::from_rows(rows), rhs);
  for (const auto& w : rest) {
    if (b.norm(w) != Rational(2) * b.evaluate(d4::to_rational(w), rel))
      throw Error(ErrorKind::not_cospherical, "cell_center: vertex " + to_string(w + base) + " is off the sphere");
  }
  Rational r2 = b.evaluate(rel, rel);
  return {rel + d4::to_rational(base), r2};
}

EmptySphereCertificate certify_cell(const QuadraticForm& b, const DelaunayCell& cell) {
  EmptySphereCertificate cert;
  cert.cell = cell;
  cert.checked_norm_bound = 0;
  if (!cell.center || !cell.sq_radius) {
    try {
      auto [c, r2] = cell_center(b, cell.vertices);
      cert.cell.center = std::move(c);
      cert.cell.sq_radius = std::move(r2);
    } catch (const Error& e) {
      cert.error = std::string(to_string(e.kind())) + ": " + e.what();
      return cert;
    }
  }
  const LatticeVector& base = cell.vertices.front();
  RationalVector rel = *cert.cell.center - d4::to_rational(base);
  cert.checked_norm_bound = Rational(4) * *cert.cell.sq_radius;
  RationalVector brel = b.apply(rel);
  std::set<LatticeVector> seen;
  for (const auto& e : enumerate_ellipsoid(b, RationalVector(b.rank()), cert.checked_norm_bound)) {
    Rational slack = b.norm(e) - Rational(2) * dot(d4::to_rational(e), brel);
    LatticeVector point = e + base;
    if (slack < 0) {
      cert.violations.push_back({point, SphereViolation::Kind::inside});
    } else if (slack == 0) {
      if (cell.contains_vertex(point)) {
        seen.insert(point);
      } else {
        cert.violations.push_back({point, SphereViolation::Kind::extra_on_sphere});
      }
    }
  }
  for (const auto& v : cell.vertices)
    if (!seen.count(v)) cert.violations.push_back({v, SphereViolation::Kind::vertex_off_sphere});
  return cert;
}

DelaunayCell canonical_orbit_rep(const DelaunayCell& cell) {
  if (cell.vertices.empty()) return cell;
  return cell.translated(-cell.vertices.front());
}

bool is_basic_simplex(const DelaunayCell& cell) {
  const std::size_t g = cell.rank();
  if (cell.vertices.size() != g + 1) return false;
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < cell.vertices.size(); ++i) diffs.push_back(cell.vertices[i] - cell.vertices[0]);
  return abs(determinant(Matrix::from_lattice_rows(diffs))) == 1;
}

std::vector<std::vector<LatticeVector>> facets_through_origin(const DelaunayCell& cell) {
  if (!cell.contains_origin()) return {};
  const std::size_t g = cell.rank();
  std::vector<RationalVector> others;
  for (const auto& v : cell.vertices)
    if (!v.is_zero()) others.push_back(d4::to_rational(v));
  std::set<std::vector<LatticeVector>> facets;
  for_each_subset(others.size(), g - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RationalVector> sub;
    for (auto i : idx) sub.push_back(others[i]);
    auto n = hyperplane_normal(sub, g);
    if (!n) return true;
    bool pos = false, neg = false;
    std::vector<LatticeVector> on;
    for (const auto& v : cell.vertices) {
      int s = sgn(dot(*n, d4::to_rational(v)));
      pos |= s > 0;
      neg |= s < 0;
      if (s == 0) on.push_back(v);
    }
    if (!(pos && neg)) facets.insert(on);
    return true;
  });
  return {facets.begin(), facets.end()};
}

namespace {

// Integral positive multiple of b; has the same Delaunay decomposition.
QuadraticForm integral_multiple(const QuadraticForm& b) {
  Integer l = 1;
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) l = lcm(l, Integer(b(i, j).get_den()));
  return b.scaled(Rational(l));
}

class StarBuilder {
 public:
  // `b` must be integral (see integral_multiple).
  StarBuilder(const QuadraticForm& b, int box) : b_(b), g_(b.rank()) {
    LatticeVector x(g_);
    for (std::size_t i = 0; i < g_; ++i) x[i] = -box;
    while (true) {
      if (!x.is_zero()) {
        points_.push_back(x);
        norms_.push_back(Rational(b_.norm(x)).get_num());
      }
      std::size_t i = 0;
      while (i < g_ && x[i] == box) x[i++] = -box;
      if (i == g_) break;
      ++x[i];
    }
  }

  // Moves the empty-sphere center from c along d until new points hit the
  // sphere; returns the new center. With B c = p / den (p integral) and
  // B d integral, the hitting time of x is
  //   t_x = (den * B(x,x) - 2 x.p) / (2 den * x.Bd),
  // so the minimum is found in integer arithmetic.
  RationalVector move(const RationalVector& c, const RationalVector& d) const {
    auto [p, den] = common_denominator(b_.apply(c));
    auto [bd, bd_den] = common_denominator(b_.apply(d));
    Integer best_num, best_along;
    bool have = false;
    Integer num, along;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      integer_dot(points_[k], bd, along);
      if (along <= 0) continue;
      integer_dot(points_[k], p, num);
      num = den * norms_[k] - 2 * num;
      if (!have || num * best_along < best_num * along) {
        best_num = num;
        best_along = along;
        have = true;
      }
    }
    if (!have) throw Error(ErrorKind::internal, "delaunay_star: no lattice point ahead of the moving center");
    Rational t(best_num * bd_den, 2 * den * best_along);
    t.canonicalize();
    return c + t * d;
  }

  std::vector<LatticeVector> on_sphere(const RationalVector& c) const {
    auto [p, den] = common_denominator(b_.apply(c));
    std::vector<LatticeVector> out{LatticeVector(g_)};
    Integer num;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      integer_dot(points_[k], p, num);
      if (den * norms_[k] == 2 * num) out.push_back(points_[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Direction B-orthogonal to span(vs).
  RationalVector orthogonal_direction(const std::vector<LatticeVector>& vs) const {
    std::vector<RationalVector> r;
    for (const auto& v : vs)
      if (!v.is_zero()) r.push_back(b_.apply(d4::to_rational(v)));
    std::vector<RationalVector> ns = r.empty() ? nullspace(Matrix(0, g_)) : nullspace(Matrix::from_rows(r));
    if (ns.empty()) throw Error(ErrorKind::internal, "delaunay_star: no orthogonal direction");
    return ns.front();
  }

  std::pair<RationalVector, std::vector<LatticeVector>> initial_cell() const {
    RationalVector c(g_);
    std::vector<LatticeVector> on{LatticeVector(g_)};
    while (affine_dimension(on) < static_cast<int>(g_)) {
      RationalVector d = orthogonal_direction(on);
      c = move(c, d);
      on = on_sphere(c);
    }
    return {c, on};
  }

  std::pair<RationalVector, std::vector<LatticeVector>> flip(const RationalVector& c,
                                                             const std::vector<LatticeVector>& cell,
                                                             const std::vector<LatticeVector>& facet) const {
    RationalVector d = orthogonal_direction(facet);
    RationalVector bd = b_.apply(d);
    for (const auto& w : cell) {
      if (std::binary_search(facet.begin(), facet.end(), w)) continue;
      if (dot(d4::to_rational(w), bd) > 0) d = Rational(-1) * d;
      break;
    }
    RationalVector next = move(c, d);
    return {next, on_sphere(next)};
  }

 private:
  static std::pair<std::vector<Integer>, Integer> common_denominator(const RationalVector& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
    std::vector<Integer> nums;
    nums.reserve(v.size());
    for (const auto& x : v) nums.push_back(Integer(x.get_num() * (den / x.get_den())));
    return {std::move(nums), std::move(den)};
  }

  static void integer_dot(const LatticeVector& x, const std::vector<Integer>& w, Integer& out) {
    out = 0;
    for (std::size_t i = 0; i < x.rank(); ++i)
      if (x[i] != 0) out += w[i] * static_cast<long>(x[i]);
  }

  QuadraticForm b_;
  std::size_t g_;
  std::vector<LatticeVector> points_;
  std::vector<Integer> norms_;
};

constexpr int kInitialBox = 3;
constexpr int kMaxBox = 48;

std::optional<DelaunayStar> try_star(const QuadraticForm& original, const QuadraticForm& b, int box) {
  StarBuilder builder(b, box);
  std::map<std::vector<LatticeVector>, RationalVector> found;
  std::deque<std::vector<LatticeVector>> queue;
  auto [c0, cell0] = builder.initial_cell();
  found.emplace(cell0, c0);
  queue.push_back(cell0);
  while (!queue.empty()) {
    auto verts = queue.front();
    queue.pop_front();
    DelaunayCell cell = make_cell(verts);
    const RationalVector center = found.at(verts);
    for (const auto& facet : facets_through_origin(cell)) {
      auto [c, next] = builder.flip(center, verts, facet);
      if (found.emplace(next, c).second) queue.push_back(next);
    }
  }

  DelaunayStar star;
  star.form = original;
  star.box_radius = box;
  std::set<DelaunayCell> reps;
  std::map<std::vector<LatticeVector>, int> facet_count;
  std::set<RationalVector> centers;
  for (const auto& [verts, c] : found) {
    DelaunayCell cell = make_cell(original, verts);
    if (!cell.center || static_cast<std::size_t>(cell.dim) != original.rank()) return std::nullopt;
    if (!certify_cell(original, cell).passed()) return std::nullopt;
    if (!centers.insert(*cell.center).second) return std::nullopt;
    for (const auto& f : facets_through_origin(cell)) facet_count[f] += 1;
    reps.insert(canonical_orbit_rep(cell));
    star.cells.push_back(std::move(cell));
  }
  for (const auto& [f, count] : facet_count)
    if (count != 2) return std::nullopt;
  star.orbit_reps.assign(reps.begin(), reps.end());
  std::sort(star.cells.begin(), star.cells.end());
  return star;
}

}  // namespace

DelaunayStar delaunay_star(const QuadraticForm& b) {
  if (b.rank() < 1 || b.rank() > 4) throw Error(ErrorKind::invalid_argument, "delaunay_star: rank must be 1..4");
  if (definiteness(b) != Definiteness::positive_definite)
    throw Error(ErrorKind::not_positive_definite, "delaunay_star: form is not positive definite");
  const QuadraticForm scaled = integral_multiple(b);
  for (int box = kInitialBox; box <= kMaxBox; box *= 2) {
    if (auto star = try_star(b, scaled, box)) return std::move(*star);
  }
  throw Error(ErrorKind::internal, "delaunay_star: certification failed up to the largest enumeration box");
}

}  // namespace d4

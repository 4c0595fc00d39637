#include "delaunay4/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace d4 {

namespace {

Matrix rows_matrix(const std::vector<RationalVector>& rows, std::size_t ambient) {
  Matrix m(rows.size(), ambient);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ambient) throw Error(ErrorKind::dimension_mismatch, "inconsistent point dimension");
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

struct Hyperplane {
  RationalVector normal;
  Rational offset;  // normal . x = offset
};

// Affine hyperplane through `pts` (g affinely independent points), or nullopt.
std::optional<Hyperplane> affine_hyperplane(const std::vector<RationalVector>& pts) {
  const std::size_t g = pts.front().size();
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  auto n = hyperplane_normal(diffs, g);
  if (!n) return std::nullopt;
  Rational off = dot(*n, pts[0]);
  return Hyperplane{std::move(*n), std::move(off)};
}

int sign(const Rational& x) { return sgn(x); }

}  // namespace

std::vector<RationalVector> to_rational(const std::vector<LatticeVector>& points) {
  std::vector<RationalVector> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(d4::to_rational(p));
  return out;
}

std::vector<LatticeVector> enumerate_ellipsoid(const QuadraticForm& b, const RationalVector& center,
                                               const Rational& bound) {
  const std::size_t g = b.rank();
  if (center.size() != g) throw Error(ErrorKind::dimension_mismatch, "enumerate_ellipsoid: center rank");
  std::vector<LatticeVector> out;
  if (bound < 0) return out;
  const LdlDecomposition dec = ldl(b);
  LatticeVector x(g);

  // Depth-first from the last coordinate; `remaining` is bound minus the
  // contribution of the coordinates already fixed.
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& remaining) {
    const std::size_t i = level;
    Rational shift = -center[i];
    for (std::size_t j = i + 1; j < g; ++j) shift += dec.mu(i, j) * (Rational(static_cast<long>(x[j])) - center[j]);
    const double radius = std::sqrt(std::max(0.0, Rational(remaining / dec.diagonal[i]).get_d()));
    const double mid = -shift.get_d();
    const auto lo = static_cast<std::int64_t>(std::floor(mid - radius)) - 1;
    const auto hi = static_cast<std::int64_t>(std::ceil(mid + radius)) + 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
      Rational t = Rational(static_cast<long>(v)) + shift;
      Rational rest = remaining - dec.diagonal[i] * t * t;
      if (rest < 0) continue;
      x[i] = v;
      if (i == 0) {
        out.push_back(x);
      } else {
        descend(i - 1, rest);
      }
    }
    x[i] = 0;
  };
  if (g == 0) return out;
  descend(g - 1, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t linear_rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(rows_matrix(vectors, vectors.front().size()));
}

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(linear_rank(diffs));
}

int affine_dimension(const std::vector<LatticeVector>& points) { return affine_dimension(to_rational(points)); }

std::optional<RationalVector> hyperplane_normal(const std::vector<RationalVector>& vectors, std::size_t ambient) {
  if (vectors.size() + 1 != ambient) return std::nullopt;
  auto ns = nullspace(rows_matrix(vectors, ambient));
  if (ns.size() != 1) return std::nullopt;
  return ns.front();
}

std::vector<RationalVector> cone_facets(const std::vector<RationalVector>& generators) {
  if (generators.empty()) throw Error(ErrorKind::invalid_argument, "cone_facets: no generators");
  const std::size_t g = generators.front().size();
  if (linear_rank(generators) != g) throw Error(ErrorKind::invalid_argument, "cone_facets: cone not full-dimensional");
  std::set<RationalVector> facets;
  for_each_subset(generators.size(), g - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RationalVector> sub;
    for (auto i : idx) sub.push_back(generators[i]);
    auto n = hyperplane_normal(sub, g);
    if (!n) return true;
    bool pos = false, neg = false;
    for (const auto& v : generators) {
      int s = sign(dot(*n, v));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return true;
    if (neg) *n = Rational(-1) * *n;
    facets.insert(*n);
    return true;
  });
  return {facets.begin(), facets.end()};
}

bool in_cone(const std::vector<RationalVector>& facets, const RationalVector& x) {
  return std::all_of(facets.begin(), facets.end(), [&](const RationalVector& n) { return dot(n, x) >= 0; });
}

bool in_cone_interior(const std::vector<RationalVector>& facets, const RationalVector& x) {
  return std::all_of(facets.begin(), facets.end(), [&](const RationalVector& n) { return dot(n, x) > 0; });
}

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<RationalVector>& points) {
  if (points.empty()) throw Error(ErrorKind::invalid_argument, "placing_triangulation: no points");
  const std::size_t g = points.front().size();

  // Initial simplex: greedily take points that raise the affine dimension.
  std::vector<std::size_t> initial;
  std::vector<RationalVector> chosen;
  for (std::size_t i = 0; i < points.size() && initial.size() < g + 1; ++i) {
    chosen.push_back(points[i]);
    if (affine_dimension(chosen) == static_cast<int>(initial.size())) {
      initial.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (initial.size() != g + 1) throw Error(ErrorKind::singular, "placing_triangulation: points not full-dimensional");

  std::vector<std::vector<std::size_t>> simplices{initial};
  std::set<std::size_t> used(initial.begin(), initial.end());

  for (std::size_t p = 0; p < points.size(); ++p) {
    if (used.count(p)) continue;
    // Boundary facets: g-subsets of simplices that occur exactly once.
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> faces;  // facet -> (count, opposite vertex)
    for (const auto& s : simplices) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) f.push_back(s[k]);
        auto& entry = faces[f];
        entry.first += 1;
        entry.second = s[drop];
      }
    }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [facet, info] : faces) {
      if (info.first != 1) continue;
      std::vector<RationalVector> pts;
      for (auto k : facet) pts.push_back(points[k]);
      auto h = affine_hyperplane(pts);
      if (!h) continue;
      int inner = sign(dot(h->normal, points[info.second]) - h->offset);
      int side = sign(dot(h->normal, points[p]) - h->offset);
      if (side != 0 && side == -inner) {
        auto s = facet;
        s.push_back(p);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    if (!added.empty()) used.insert(p);
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

Rational normalized_volume(const std::vector<RationalVector>& points) {
  Rational total = 0;
  for (const auto& s : placing_triangulation(points)) {
    std::vector<RationalVector> diffs;
    for (std::size_t k = 1; k < s.size(); ++k) diffs.push_back(points[s[k]] - points[s[0]]);
    total += abs(determinant(rows_matrix(diffs, points.front().size())));
  }
  return total;
}

bool interiors_disjoint(const std::vector<RationalVector>& p, const std::vector<RationalVector>& q) {
  const std::size_t g = p.front().size();
  std::vector<RationalVector> all;
  for (const auto& v : p)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  for (const auto& v : q)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  bool found = false;
  for_each_subset(all.size(), g, [&](const std::vector<std::size_t>& idx) {
    std::vector<RationalVector> pts;
    for (auto i : idx) pts.push_back(all[i]);
    auto h = affine_hyperplane(pts);
    if (!h) return true;
    auto side_of = [&](const std::vector<RationalVector>& set) {
      int s = 0;
      for (const auto& v : set) {
        int t = sign(dot(h->normal, v) - h->offset);
        if (t == 0) continue;
        if (s != 0 && t != s) return 2;
        s = t;
      }
      return s;
    };
    int sp = side_of(p);
    int sq = side_of(q);
    if (sp != 2 && sq != 2 && (sp == 0 || sq == 0 || sp != sq)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool cone_interiors_disjoint(const std::vector<RationalVector>& p, const std::vector<RationalVector>& q) {
  const std::size_t g = p.front().size();
  std::vector<RationalVector> all;
  for (const auto& v : p)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  for (const auto& v : q)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  bool found = false;
  for_each_subset(all.size(), g - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RationalVector> sub;
    for (auto i : idx) sub.push_back(all[i]);
    auto n = hyperplane_normal(sub, g);
    if (!n) return true;
    auto side_of = [&](const std::vector<RationalVector>& set) {
      int s = 0;
      for (const auto& v : set) {
        int t = sign(dot(*n, v));
        if (t == 0) continue;
        if (s != 0 && t != s) return 2;
        s = t;
      }
      return s;
    };
    int sp = side_of(p);
    int sq = side_of(q);
    if (sp != 2 && sq != 2 && (sp == 0 || sq == 0 || sp != sq)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace d4

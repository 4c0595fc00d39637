#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace oracle {

namespace {

Rational pair(const QuadraticForm& b, const RationalVector& x, const RationalVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * b(i, j) * y[j];
  return s;
}

RationalVector rat(const LatticeVector& v) {
  RationalVector out;
  for (auto c : v.coords()) out.emplace_back(static_cast<long>(c));
  return out;
}

std::vector<LatticeVector> box(std::size_t g, int radius) {
  std::vector<LatticeVector> out;
  if (g == 1) {
    for (int a = -radius; a <= radius; ++a) out.push_back({a});
  } else {
    for (int a = -radius; a <= radius; ++a)
      for (int c = -radius; c <= radius; ++c) out.push_back({a, c});
  }
  return out;
}

Rational dist(const QuadraticForm& b, const LatticeVector& x, const RationalVector& alpha) {
  RationalVector d = rat(x);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= alpha[i];
  return pair(b, d, d);
}

// Circumcenter of {0} + vs: 2 B(v, c) = B(v, v) for every v, by Cramer.
bool center(const QuadraticForm& b, const std::vector<LatticeVector>& vs, RationalVector& c) {
  const std::size_t g = b.rank();
  if (g == 1) {
    Rational a = 2 * b(0, 0) * vs[0][0];
    if (a == 0) return false;
    c = {b(0, 0) * vs[0][0] * vs[0][0] / a};
    return true;
  }
  Rational m[2][2], r[2];
  for (int k = 0; k < 2; ++k) {
    RationalVector v = rat(vs[k]);
    for (int j = 0; j < 2; ++j) m[k][j] = 2 * (v[0] * b(0, j) + v[1] * b(1, j));
    r[k] = pair(b, v, v);
  }
  Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == 0) return false;
  c = {(r[0] * m[1][1] - m[0][1] * r[1]) / det, (m[0][0] * r[1] - r[0] * m[1][0]) / det};
  return true;
}

}  // namespace

const std::vector<CorpusForm>& corpus() {
  static const std::vector<CorpusForm> forms = {
      {"unit line", QuadraticForm{{1}}},
      {"scaled line", QuadraticForm{{Rational(7, 3)}}},
      {"hexagonal", QuadraticForm{{2, -1}, {-1, 2}}},
      {"square", QuadraticForm{{1, 0}, {0, 1}}},
      {"rectangle", QuadraticForm{{1, 0}, {0, 3}}},
      {"hexagonal flipped", QuadraticForm{{2, 1}, {1, 2}}},
      {"generic", QuadraticForm{{3, 1}, {1, 2}}},
      {"skew", QuadraticForm{{5, 2}, {2, 1}}},
      {"half offdiagonal", QuadraticForm{{1, Rational(1, 2)}, {Rational(1, 2), 1}}},
      {"elongated", QuadraticForm{{4, -3}, {-3, 4}}},
  };
  return forms;
}

VertexSet nearest(const QuadraticForm& b, const RationalVector& alpha, int radius) {
  VertexSet best;
  Rational best_d = -1;
  for (const auto& x : box(b.rank(), radius)) {
    Rational d = dist(b, x, alpha);
    if (best_d < 0 || d < best_d) {
      best_d = d;
      best = {x};
    } else if (d == best_d) {
      best.push_back(x);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::set<VertexSet> star(const QuadraticForm& b, int radius) {
  const std::size_t g = b.rank();
  std::vector<LatticeVector> shorts;
  for (const auto& x : box(g, 3))
    if (!x.is_zero()) shorts.push_back(x);
  std::set<VertexSet> out;
  auto consider = [&](const std::vector<LatticeVector>& vs) {
    RationalVector c;
    if (!center(b, vs, c)) return;
    VertexSet cell = nearest(b, c, radius);
    if (std::find(cell.begin(), cell.end(), LatticeVector(g)) == cell.end()) return;
    out.insert(cell);
  };
  for (std::size_t i = 0; i < shorts.size(); ++i) {
    if (g == 1) {
      consider({shorts[i]});
      continue;
    }
    for (std::size_t j = i + 1; j < shorts.size(); ++j) consider({shorts[i], shorts[j]});
  }
  return out;
}

VertexSet shift_to_origin(const VertexSet& cell) {
  LatticeVector lo = *std::min_element(cell.begin(), cell.end());
  VertexSet out;
  for (const auto& v : cell) out.push_back(v - lo);
  std::sort(out.begin(), out.end());
  return out;
}

bool totally_generating(const VertexSet& cell, int bound) {
  const std::size_t g = cell.front().rank();
  std::vector<LatticeVector> gens;
  for (const auto& v : cell)
    if (!v.is_zero()) gens.push_back(v);

  std::set<LatticeVector> sums{LatticeVector(g)};
  std::set<LatticeVector> layer = sums;
  for (int k = 0; k < 3 * bound; ++k) {
    std::set<LatticeVector> next;
    for (const auto& x : layer)
      for (const auto& u : gens) next.insert(x + u);
    sums.insert(next.begin(), next.end());
    layer = std::move(next);
  }

  // x in the cone iff x = a u + c v with a, c >= 0 for some generator pair
  // (or x = a u in rank 1).
  auto in_cone = [&](const LatticeVector& x) {
    if (x.is_zero()) return true;
    for (const auto& u : gens) {
      if (g == 1) {
        if ((x[0] > 0) == (u[0] > 0)) return true;
        continue;
      }
      if (x[0] * u[1] == x[1] * u[0] && x[0] * u[0] + x[1] * u[1] > 0) return true;
      for (const auto& v : gens) {
        std::int64_t det = u[0] * v[1] - u[1] * v[0];
        if (det == 0) continue;
        std::int64_t a = x[0] * v[1] - x[1] * v[0];
        std::int64_t c = u[0] * x[1] - u[1] * x[0];
        if ((det > 0 && a >= 0 && c >= 0) || (det < 0 && a <= 0 && c <= 0)) return true;
      }
    }
    return false;
  };
  for (const auto& x : box(g, bound)) {
    std::int64_t l1 = 0;
    for (auto c : x.coords()) l1 += std::llabs(c);
    if (l1 > bound || !in_cone(x)) continue;
    if (!sums.count(x)) return false;
  }
  return true;
}

}  // namespace oracle

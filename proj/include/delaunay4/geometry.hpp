#pragma once

// Lattice-point enumeration and small exact polyhedral routines.
//
// Point sets here are tiny (a Delaunay cell has at most a few dozen vertices
// in rank <= 4), so combinatorial enumeration over subsets is acceptable.

#include <cstddef>
#include <optional>
#include <vector>

#include "delaunay4/exact.hpp"

namespace d4 {

/// All x in Z^g with B(x - center, x - center) <= bound, for positive definite
/// B. Exhaustive: coordinate ranges come from the exact LDL^T decomposition
/// (Fincke-Pohst), padded and then filtered exactly. Output sorted.
std::vector<LatticeVector> enumerate_ellipsoid(const QuadraticForm& b, const RationalVector& center,
                                               const Rational& bound);

/// Dimension of the affine hull (-1 for an empty set).
int affine_dimension(const std::vector<RationalVector>& points);
int affine_dimension(const std::vector<LatticeVector>& points);

/// Dimension of the linear span.
std::size_t linear_rank(const std::vector<RationalVector>& vectors);

/// Primitive integer normal of the hyperplane through the origin spanned by
/// `vectors` (g-1 independent vectors in dimension g), or nullopt when they
/// do not span a hyperplane.
std::optional<RationalVector> hyperplane_normal(const std::vector<RationalVector>& vectors,
                                                std::size_t ambient);

/// Facets of the full-dimensional pointed cone generated by `generators`,
/// as inward normals n (n.x >= 0 on the cone), primitive, sorted, unique.
std::vector<RationalVector> cone_facets(const std::vector<RationalVector>& generators);

bool in_cone(const std::vector<RationalVector>& facets, const RationalVector& x);

/// True iff x lies in the relative interior of the cone (strictly positive on
/// every facet).
bool in_cone_interior(const std::vector<RationalVector>& facets, const RationalVector& x);

/// Placing triangulation of conv(points), points processed in the given order.
/// Returns maximal simplices as sorted index lists. Requires a
/// full-dimensional point set.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<RationalVector>& points);

/// g! * Euclidean volume of conv(points), computed exactly from a
/// triangulation. A basic lattice simplex has normalized volume 1.
Rational normalized_volume(const std::vector<RationalVector>& points);

/// True iff the full-dimensional polytopes conv(p) and conv(q) have disjoint
/// interiors, decided by searching for a weakly separating hyperplane among
/// those through g affinely independent points of p and q (extreme rays of
/// the cone of separating hyperplanes).
bool interiors_disjoint(const std::vector<RationalVector>& p, const std::vector<RationalVector>& q);

/// Same question for two full-dimensional cones given by generators.
bool cone_interiors_disjoint(const std::vector<RationalVector>& p, const std::vector<RationalVector>& q);

std::vector<RationalVector> to_rational(const std::vector<LatticeVector>& points);

/// Calls f on every k-subset of {0..n-1} in lexicographic order; stops early
/// when f returns false.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace d4

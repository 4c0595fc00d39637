#pragma once

// Delaunay cells and the Delaunay star Del(0) of a positive definite form.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delaunay4/exact.hpp"

namespace d4 {

/// A lattice polytope given by its vertex list (sorted, distinct). Full
/// dimensional cells carry their center (hole) and squared circumradius.
struct DelaunayCell {
  std::vector<LatticeVector> vertices;
  int dim = -1;
  std::optional<RationalVector> center;
  std::optional<Rational> sq_radius;

  std::size_t rank() const { return vertices.empty() ? 0 : vertices.front().rank(); }
  bool contains_vertex(const LatticeVector& v) const;
  bool contains_origin() const;
  DelaunayCell translated(const LatticeVector& shift) const;

  /// Same vertex set (center data is derived and not compared).
  bool operator==(const DelaunayCell& other) const { return vertices == other.vertices; }
  bool operator<(const DelaunayCell& other) const { return vertices < other.vertices; }
};

/// Sorted, deduplicated cell without center data.
DelaunayCell make_cell(std::vector<LatticeVector> vertices);

/// Sorted cell with center data computed for `b` when full-dimensional and
/// cospherical.
DelaunayCell make_cell(const QuadraticForm& b, std::vector<LatticeVector> vertices);

std::string to_string(const DelaunayCell& cell);

/// Lattice points nearest to alpha in the metric of b. Throws
/// Error{not_positive_definite}.
std::vector<LatticeVector> nearest_points(const QuadraticForm& b, const RationalVector& alpha);

/// Center c and r^2 = B(v - c, v - c) of a full-dimensional cospherical vertex
/// set. Throws Error{singular} or Error{not_cospherical}.
std::pair<RationalVector, Rational> cell_center(const QuadraticForm& b, const std::vector<LatticeVector>& vertices);

struct SphereViolation {
  LatticeVector point;
  enum class Kind { inside, extra_on_sphere, vertex_off_sphere } kind;
};

/// Empty-sphere certificate: every lattice point e (relative to the first
/// vertex) with B(e,e) <= checked_norm_bound was tested.
struct EmptySphereCertificate {
  DelaunayCell cell;
  Rational checked_norm_bound;
  std::vector<SphereViolation> violations;
  std::optional<std::string> error;  // set when no center exists

  bool passed() const { return !error && violations.empty(); }
};

EmptySphereCertificate certify_cell(const QuadraticForm& b, const DelaunayCell& cell);

/// Translate of the cell placing its lexicographically smallest vertex at the
/// origin: the unique translate by a vertex whose sorted vertex list is
/// lexicographically largest. Idempotent.
DelaunayCell canonical_orbit_rep(const DelaunayCell& cell);

/// g+1 vertices whose differences from one vertex form a Z-basis.
bool is_basic_simplex(const DelaunayCell& cell);

/// Facets of a full-dimensional cell that contain the origin, each as a
/// sorted vertex list.
std::vector<std::vector<LatticeVector>> facets_through_origin(const DelaunayCell& cell);

struct DelaunayStar {
  QuadraticForm form;
  std::vector<DelaunayCell> cells;       // maximal cells containing 0, sorted
  std::vector<DelaunayCell> orbit_reps;  // canonical_orbit_rep of each, unique, sorted
  int box_radius = 0;                    // enumeration box that certified the result
};

/// Throws Error{not_positive_definite} for non-definite input and
/// Error{internal} when certification fails at the largest box.
DelaunayStar delaunay_star(const QuadraticForm& b);

}  // namespace d4

#pragma once

// Totally / simplicially generating cells: does the cone C(0, cell) have its
// lattice points generated, as a semigroup, by the lattice points of the cell?

#include <optional>
#include <string>
#include <vector>

#include "delaunay4/delaunay.hpp"

namespace d4 {

/// Cone at the origin over a cell containing 0.
struct ConeAtZero {
  std::vector<LatticeVector> rays;            // primitive extremal rays, sorted
  std::vector<LatticeVector> lattice_points;  // the cell's vertices (sigma cap X)
};

/// Throws Error{invalid_argument} when 0 is not a vertex.
ConeAtZero cone_rays(const DelaunayCell& cell);

/// Lattice points of the half-open parallelepiped {sum l_i v_i : 0 <= l_i < 1},
/// sorted. Throws Error{singular} for dependent rays.
std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& rays);

/// Exact membership of x in the semigroup generated over Z>=0 by
/// `generators`, which must span a pointed full-dimensional cone. The search
/// is graded by an integral functional positive on every generator, so it is
/// exhaustive.
bool in_semigroup(const std::vector<LatticeVector>& generators, const LatticeVector& x);

struct GenerationReport {
  bool totally_generating = false;
  std::optional<bool> simplicially_generating;  // set by is_simplicially_generating
  std::optional<LatticeVector> witness;         // lattice point of C(0,cell) outside the semigroup
  std::vector<DelaunayCell> decomposition;      // pieces containing 0
  std::vector<std::string> notes;
};

/// C(0,cell) cap X == Semi(0, cell vertices). The cell's listed vertices are
/// taken as its lattice points, which holds for Delaunay cells.
GenerationReport is_totally_generating(const DelaunayCell& cell);

/// Checks the pieces containing 0: pairwise disjoint interiors, each totally
/// generating, and their cones cover C(0,cell). Throws Error{not_a_refinement}
/// when a piece is not full-dimensional or has a vertex outside the cell.
GenerationReport is_simplicially_generating(const DelaunayCell& cell, const std::vector<DelaunayCell>& pieces);

/// C(0, coarse) == union of C(0, piece) over pieces containing 0. Both
/// inclusions are decided exactly (ray containment, disjoint cone interiors,
/// equal cross-section volume) and cross-checked on lattice points up to a
/// height bound.
bool cone_cover_check(const DelaunayCell& coarse, const std::vector<DelaunayCell>& pieces);

}  // namespace d4

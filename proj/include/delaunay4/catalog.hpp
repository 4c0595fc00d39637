#pragma once

// Named generator matrices and the Voronoi cones / chambers built from them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delaunay4/exact.hpp"

namespace d4 {

struct NamedCone {
  std::string name;  // e.g. "dim4.V2capV3"
  std::size_t ambient_rank = 0;
  std::vector<std::string> labels;  // generator names, e.g. "e13", "e12345"
  std::vector<QuadraticForm> generators;

  /// Dimension of the linear span of the generators.
  std::size_t dimension() const;
};

/// Throws Error{unknown_name}.
const NamedCone& catalog(std::string_view name);
const std::vector<NamedCone>& catalog_entries();
std::vector<std::string> catalog_names();

/// A named generator in a given rank: "e13", "e12345", "f1234", "g124", ...
/// Throws Error{unknown_name}.
QuadraticForm named_form(std::size_t rank, std::string_view label);

/// sum_k w_k gen_k. Throws Error{invalid_argument} on arity mismatch or a
/// nonpositive weight.
QuadraticForm sample_interior(const NamedCone& cone, const std::vector<Rational>& weights);
/// All weights 1.
QuadraticForm sample_interior(const NamedCone& cone);
/// Weights 1, 2, 3, ... : the cross-check sample.
QuadraticForm sample_interior_alt(const NamedCone& cone);

struct Membership {
  bool member = false;
  std::optional<std::vector<Rational>> coefficients;  // one per generator
};

/// Exact membership by the cone's facet inequalities inside its span; the
/// witness comes from a basis subset of generators.
Membership contains(const NamedCone& cone, const QuadraticForm& b);

/// True iff sum(lhs) == sum(rhs) as matrices.
bool forms_sum_equal(const std::vector<QuadraticForm>& lhs, const std::vector<QuadraticForm>& rhs);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// omega decomposition, e12345 + e34125 identity, V3 cap V4 == W0 and F12 == V2.
std::vector<IdentityCheck> verify_matrix_identities();

enum class ChamberSide { first, second, boundary, outside };  // F_abcd, F_cdab

struct ChamberCoordinates {
  std::string split;  // "abcd"
  std::vector<std::string> labels;
  std::vector<Rational> coefficients;  // 8 e_ij, then e_abcde, e_cdabe
  Rational y_ab;
  Rational y_cd;
};

/// Coefficients of b in the basis {e_ij : ij != ab, cd} + e_abcde + e_cdabe.
/// Throws Error{invalid_argument} for a malformed split.
ChamberCoordinates chamber_coordinates(std::string_view split, const QuadraticForm& b);

/// G_abcd is V3 cup V4 in these coordinates: min(y_ab, y_cd) >= 0 and every
/// e_ij coefficient is at least -min(y_ab, y_cd). Inside, the sign of
/// y_ab - y_cd picks the side.
ChamberSide chamber_side(std::string_view split, const QuadraticForm& b);

std::string to_string(ChamberSide side, std::string_view split);

}  // namespace d4

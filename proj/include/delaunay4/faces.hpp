#pragma once

// Codimension-one faces of the perfect cone K in the coordinates where its
// generators are the twelve forms (x_p +- x_q)^2.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "delaunay4/catalog.hpp"
#include "delaunay4/exact.hpp"

namespace d4 {

/// (x_p + x_q)^2 when plus, (x_p - x_q)^2 otherwise; 1 <= p < q <= 4.
struct SignedPair {
  int p = 1;
  int q = 2;
  bool plus = true;

  auto operator<=>(const SignedPair&) const = default;
};

using DropSet = std::array<SignedPair, 3>;  // sorted

QuadraticForm signed_pair_form(const SignedPair& s);
/// All twelve, sorted.
const std::vector<SignedPair>& all_signed_pairs();
/// The signed pair whose form is a positive multiple of b, if any.
std::optional<SignedPair> identify_signed_pair(const QuadraticForm& b);
std::string to_string(const SignedPair& s);

/// Substitution x -> T x with rows (1,1,0,0), (1,-1,0,0), (1,0,-1,0), (1,0,0,-1).
const Matrix& voronoi_matrix();
/// T^T B T.
QuadraticForm voronoi_transform(const QuadraticForm& b);

enum class GraphShape { triangle, fork, path, disconnected, multi_edge };
std::string to_string(GraphShape s);

struct ColoredEdge {
  int p = 1;
  int q = 2;
  bool red = false;  // red: rho_pq = 0, the (x_p - x_q)^2 term is missing
};

struct ColoredGraph {
  std::vector<ColoredEdge> edges;
  GraphShape shape() const;
};

ColoredGraph graph_of(const DropSet& dropped);

struct KFace {
  DropSet dropped;
  std::vector<SignedPair> kept;
  ColoredGraph graph;
  RationalVector certificate;  // functional on upper coordinates
};

/// A functional on symmetric matrices vanishing on the nine kept forms and
/// positive on the three dropped ones, or nullopt when none exists.
std::optional<RationalVector> facial_certificate(const DropSet& dropped);

/// All 3-subsets of the twelve forms that carry a facial certificate.
std::vector<KFace> enumerate_faces();

/// Closure of {tau_i, tau_ij, sigma} under multiplication. Throws
/// Error{internal} past `bound` elements.
std::vector<Matrix> group_G(std::size_t bound = 10000);

/// Image of a drop set under gamma acting on forms by B -> gamma^T B gamma.
/// Throws Error{internal} when gamma does not permute the twelve forms.
DropSet act(const Matrix& gamma, const DropSet& dropped);

struct OrbitClassification {
  std::vector<std::vector<DropSet>> orbits;  // sorted
  std::vector<DropSet> bf;                   // orbit of a black fork
  std::vector<DropSet> rt;                   // orbit of a red triangle
};

/// Throws Error{internal} when the orbits are not exactly one BF and one RT.
OrbitClassification orbit_classify(const std::vector<KFace>& faces, const std::vector<Matrix>& group);

enum class VoronoiType { II, III };
std::string to_string(VoronoiType t);

/// II iff the face lies in BF.
VoronoiType classify_type(const DropSet& face, const OrbitClassification& orbits);

/// The generators of `cone` that belong to K, carried into +- coordinates;
/// returns the drop set when they are exactly the kept forms of a face.
std::optional<DropSet> k_face_of(const NamedCone& cone);

std::string to_string(const DropSet& d);

}  // namespace d4

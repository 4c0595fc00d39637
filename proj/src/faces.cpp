#include "delaunay4/faces.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "delaunay4/geometry.hpp"

namespace d4 {

namespace {

std::vector<Rational> key_of(const Matrix& m) {
  std::vector<Rational> k;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) k.push_back(m(r, c));
  return k;
}

DropSet sorted(DropSet d) {
  std::sort(d.begin(), d.end());
  return d;
}

// Position of each signed pair's image under gamma.
std::vector<std::size_t> permutation_of(const Matrix& gamma) {
  const auto& all = all_signed_pairs();
  std::vector<std::size_t> perm;
  for (const auto& s : all) {
    auto image = identify_signed_pair(congruence_act(gamma, signed_pair_form(s)));
    if (!image) throw Error(ErrorKind::internal, "group element does not permute the K generators");
    perm.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), *image) - all.begin()));
  }
  return perm;
}

std::size_t index_of(const SignedPair& s) {
  const auto& all = all_signed_pairs();
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), s) - all.begin());
}

}  // namespace

QuadraticForm signed_pair_form(const SignedPair& s) {
  Matrix m(4, 4);
  m(s.p - 1, s.p - 1) = 1;
  m(s.q - 1, s.q - 1) = 1;
  m(s.p - 1, s.q - 1) = s.plus ? 1 : -1;
  m(s.q - 1, s.p - 1) = s.plus ? 1 : -1;
  return QuadraticForm(m);
}

const std::vector<SignedPair>& all_signed_pairs() {
  static const std::vector<SignedPair> all = [] {
    std::vector<SignedPair> v;
    for (int p = 1; p <= 4; ++p)
      for (int q = p + 1; q <= 4; ++q)
        for (bool plus : {false, true}) v.push_back({p, q, plus});
    std::sort(v.begin(), v.end());
    return v;
  }();
  return all;
}

std::optional<SignedPair> identify_signed_pair(const QuadraticForm& b) {
  if (b.rank() != 4) return std::nullopt;
  const QuadraticForm ray = primitive_ray(b);
  for (const auto& s : all_signed_pairs())
    if (signed_pair_form(s) == ray) return s;
  return std::nullopt;
}

std::string to_string(const SignedPair& s) {
  return "(x" + std::to_string(s.p) + (s.plus ? "+" : "-") + "x" + std::to_string(s.q) + ")^2";
}

const Matrix& voronoi_matrix() {
  static const Matrix t{{1, 1, 0, 0}, {1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}};
  return t;
}

QuadraticForm voronoi_transform(const QuadraticForm& b) {
  if (b.rank() != 4) throw Error(ErrorKind::dimension_mismatch, "the Voronoi transformation acts on rank-4 forms");
  return congruence_act(voronoi_matrix(), b);
}

std::string to_string(GraphShape s) {
  switch (s) {
    case GraphShape::triangle: return "triangle";
    case GraphShape::fork: return "fork";
    case GraphShape::path: return "path";
    case GraphShape::disconnected: return "disconnected";
    case GraphShape::multi_edge: return "multi_edge";
  }
  return "disconnected";
}

GraphShape ColoredGraph::shape() const {
  std::set<std::pair<int, int>> pairs;
  std::map<int, int> degree;
  for (const auto& e : edges) {
    pairs.insert({e.p, e.q});
    ++degree[e.p];
    ++degree[e.q];
  }
  if (pairs.size() != edges.size()) return GraphShape::multi_edge;
  if (degree.size() == 3) {
    bool cycle = std::all_of(degree.begin(), degree.end(), [](const auto& d) { return d.second == 2; });
    return cycle ? GraphShape::triangle : GraphShape::disconnected;
  }
  if (degree.size() == 4) {
    int top = 0;
    for (const auto& [v, d] : degree) top = std::max(top, d);
    if (top == 3) return GraphShape::fork;
    // Three edges on four vertices with max degree 2: a path or a
    // disjoint union, told apart by the number of leaves.
    int leaves = 0;
    for (const auto& [v, d] : degree) leaves += d == 1;
    return leaves == 2 ? GraphShape::path : GraphShape::disconnected;
  }
  return GraphShape::disconnected;
}

ColoredGraph graph_of(const DropSet& dropped) {
  ColoredGraph g;
  for (const auto& s : dropped) g.edges.push_back({s.p, s.q, !s.plus});
  return g;
}

std::optional<RationalVector> facial_certificate(const DropSet& dropped) {
  std::vector<RationalVector> kept;
  for (const auto& s : all_signed_pairs())
    if (std::find(dropped.begin(), dropped.end(), s) == dropped.end()) kept.push_back(signed_pair_form(s).upper_coords());
  if (kept.size() != 9) return std::nullopt;
  auto n = hyperplane_normal(kept, 10);
  if (!n) return std::nullopt;
  int sign = 0;
  for (const auto& s : dropped) {
    int t = sgn(dot(*n, signed_pair_form(s).upper_coords()));
    if (t == 0 || (sign != 0 && t != sign)) return std::nullopt;
    sign = t;
  }
  if (sign < 0) *n = Rational(-1) * *n;
  return n;
}

std::vector<KFace> enumerate_faces() {
  const auto& all = all_signed_pairs();
  std::vector<KFace> out;
  for_each_subset(all.size(), 3, [&](const std::vector<std::size_t>& idx) {
    DropSet d{all[idx[0]], all[idx[1]], all[idx[2]]};
    auto cert = facial_certificate(d);
    if (!cert) return true;
    KFace f;
    f.dropped = sorted(d);
    for (const auto& s : all)
      if (std::find(d.begin(), d.end(), s) == d.end()) f.kept.push_back(s);
    f.graph = graph_of(f.dropped);
    f.certificate = std::move(*cert);
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

std::vector<Matrix> group_G(std::size_t bound) {
  std::vector<Matrix> gens;
  for (int i = 0; i < 4; ++i) {
    Matrix t = Matrix::identity(4);
    t(i, i) = -1;
    gens.push_back(t);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Matrix t(4, 4);
      for (int k = 0; k < 4; ++k) t(k, k) = 1;
      t(i, i) = 0;
      t(j, j) = 0;
      t(i, j) = 1;
      t(j, i) = 1;
      gens.push_back(t);
    }
  Matrix sigma(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sigma(i, j) = Rational(1, 2) - (i == j ? 1 : 0);
  gens.push_back(sigma);

  std::map<std::vector<Rational>, Matrix> seen;
  std::deque<Matrix> queue{Matrix::identity(4)};
  seen.emplace(key_of(queue.front()), queue.front());
  while (!queue.empty()) {
    Matrix m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix next = m * g;
      if (seen.emplace(key_of(next), next).second) {
        if (seen.size() > bound) throw Error(ErrorKind::internal, "group closure exceeded the element bound");
        queue.push_back(next);
      }
    }
  }
  std::vector<Matrix> out;
  for (auto& [k, m] : seen) out.push_back(m);
  return out;
}

DropSet act(const Matrix& gamma, const DropSet& dropped) {
  auto perm = permutation_of(gamma);
  const auto& all = all_signed_pairs();
  DropSet out;
  for (std::size_t k = 0; k < 3; ++k) out[k] = all[perm[index_of(dropped[k])]];
  return sorted(out);
}

OrbitClassification orbit_classify(const std::vector<KFace>& faces, const std::vector<Matrix>& group) {
  const auto& all = all_signed_pairs();
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& g : group) perms.push_back(permutation_of(g));
  std::set<DropSet> face_set;
  for (const auto& f : faces) face_set.insert(f.dropped);

  OrbitClassification out;
  std::set<DropSet> assigned;
  for (const auto& f : faces) {
    if (assigned.count(f.dropped)) continue;
    std::set<DropSet> orbit;
    for (const auto& perm : perms) {
      DropSet image;
      for (std::size_t k = 0; k < 3; ++k) image[k] = all[perm[index_of(f.dropped[k])]];
      image = sorted(image);
      if (!face_set.count(image)) throw Error(ErrorKind::internal, "group image of a face is not a face");
      orbit.insert(image);
    }
    assigned.insert(orbit.begin(), orbit.end());
    out.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(out.orbits.begin(), out.orbits.end());

  auto find_orbit = [&](GraphShape shape, bool red) -> const std::vector<DropSet>* {
    for (const auto& orbit : out.orbits)
      for (const auto& d : orbit) {
        auto g = graph_of(d);
        if (g.shape() == shape &&
            std::all_of(g.edges.begin(), g.edges.end(), [&](const ColoredEdge& e) { return e.red == red; }))
          return &orbit;
      }
    return nullptr;
  };
  const auto* bf = find_orbit(GraphShape::fork, false);
  const auto* rt = find_orbit(GraphShape::triangle, true);
  if (out.orbits.size() != 2 || !bf || !rt || bf == rt)
    throw Error(ErrorKind::internal, "expected exactly two orbits, one of black forks and one of red triangles; got " +
                                         std::to_string(out.orbits.size()) + " orbits");
  out.bf = *bf;
  out.rt = *rt;
  return out;
}

std::string to_string(VoronoiType t) { return t == VoronoiType::II ? "II" : "III"; }

VoronoiType classify_type(const DropSet& face, const OrbitClassification& orbits) {
  if (std::binary_search(orbits.bf.begin(), orbits.bf.end(), face)) return VoronoiType::II;
  if (std::binary_search(orbits.rt.begin(), orbits.rt.end(), face)) return VoronoiType::III;
  throw Error(ErrorKind::invalid_argument, "classify_type: " + to_string(face) + " is not a face of K");
}

std::optional<DropSet> k_face_of(const NamedCone& cone) {
  const auto& k = catalog("dim4.K");
  std::set<SignedPair> kept;
  for (std::size_t i = 0; i < cone.labels.size(); ++i) {
    if (std::find(k.labels.begin(), k.labels.end(), cone.labels[i]) == k.labels.end()) continue;
    auto s = identify_signed_pair(voronoi_transform(cone.generators[i]));
    if (!s) return std::nullopt;
    kept.insert(*s);
  }
  std::vector<SignedPair> dropped;
  for (const auto& s : all_signed_pairs())
    if (!kept.count(s)) dropped.push_back(s);
  if (dropped.size() != 3) return std::nullopt;
  DropSet d{dropped[0], dropped[1], dropped[2]};
  if (!facial_certificate(d)) return std::nullopt;
  return d;
}

std::string to_string(const DropSet& d) {
  std::string out = "{";
  for (std::size_t k = 0; k < 3; ++k) {
    if (k) out += ", ";
    out += to_string(d[k]);
  }
  return out + "}";
}

}  // namespace d4

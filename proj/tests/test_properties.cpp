// Randomized and exhaustive invariant checks. Seeds are fixed so failures
// reproduce.

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "delaunay4/faces.hpp"
#include "delaunay4/generation.hpp"
#include "delaunay4/geometry.hpp"
#include "delaunay4/io.hpp"
#include "delaunay4/verifier.hpp"
#include "support.hpp"

namespace d4 {
namespace {

std::mt19937& rng() {
  static std::mt19937 gen(20261018);
  return gen;
}

Rational random_rational(int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  Rational r(num(rng()), den(rng()));
  r.canonicalize();
  return r;
}

RationalVector random_vector(std::size_t g) {
  RationalVector v;
  for (std::size_t i = 0; i < g; ++i) v.push_back(random_rational());
  return v;
}

Matrix random_matrix(std::size_t g) {
  Matrix m(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) m(i, j) = random_rational(4);
  return m;
}

QuadraticForm random_symmetric(std::size_t g) {
  Matrix m = random_matrix(g);
  return QuadraticForm(m + m.transpose());
}

// A^T A plus a small diagonal: positive definite with small integer entries.
QuadraticForm random_definite(std::size_t g) {
  std::uniform_int_distribution<int> e(-2, 2);
  Matrix a(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) a(i, j) = e(rng());
  Matrix m = a.transpose() * a;
  for (std::size_t i = 0; i < g; ++i) m(i, i) += 1;
  return QuadraticForm(m);
}

Matrix permutation(const std::vector<int>& p) {
  Matrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, p[i]) = 1;
  return m;
}

TEST(ExactProperties, EvaluateIsSymmetric) {
  for (int t = 0; t < 200; ++t) {
    const std::size_t g = 1 + t % 4;
    QuadraticForm b = random_symmetric(g);
    auto x = random_vector(g), y = random_vector(g);
    EXPECT_EQ(b.evaluate(x, y), b.evaluate(y, x));
  }
}

TEST(ExactProperties, DefinitenessIsCongruenceInvariant) {
  int seen[3] = {0, 0, 0};
  for (int t = 0; t < 200; ++t) {
    const std::size_t g = 1 + t % 4;
    QuadraticForm b = t % 3 == 0 ? random_definite(g) : random_symmetric(g);
    Matrix a = random_matrix(g);
    if (determinant(a) == 0) continue;
    auto d = definiteness(b);
    ++seen[static_cast<int>(d)];
    EXPECT_EQ(definiteness(congruence_act(a, b)), d);
  }
  EXPECT_GT(seen[0], 0);
  EXPECT_GT(seen[2], 0);
  // Semidefinite examples: rank-deficient Gram matrices A^T D A.
  for (int t = 0; t < 50; ++t) {
    const std::size_t g = 2 + t % 3;
    Matrix a = random_matrix(g);
    if (determinant(a) == 0) continue;
    QuadraticForm psd = congruence_act(a, named_form(g, "e12"));
    EXPECT_EQ(definiteness(psd), Definiteness::positive_semidefinite);
  }
}

TEST(ExactProperties, DefiniteFormsArePositiveOnSamples) {
  for (int t = 0; t < 60; ++t) {
    const std::size_t g = 1 + t % 4;
    QuadraticForm b = random_definite(g);
    ASSERT_EQ(definiteness(b), Definiteness::positive_definite);
    auto d = ldl(b);
    for (const auto& x : d.diagonal) EXPECT_GT(x, 0);
    for (int k = 0; k < 20; ++k) {
      auto x = random_vector(g);
      if (std::all_of(x.begin(), x.end(), [](const Rational& r) { return r == 0; })) continue;
      EXPECT_GT(b.evaluate(x, x), 0);
    }
  }
}

TEST(ExactProperties, ReciprocalsMultiplyToOne) {
  for (int t = 0; t < 500; ++t) {
    Rational a = random_rational(1000);
    if (a == 0) continue;
    Rational inv = 1 / a;
    EXPECT_EQ(a * inv, 1);
    EXPECT_EQ(parse_rational(format_rational(a)), a);
  }
}

// Rank-2 and rank-3 random definite forms.
std::vector<QuadraticForm> star_forms() {
  std::vector<QuadraticForm> out;
  for (int t = 0; t < 12; ++t) out.push_back(random_definite(2));
  for (int t = 0; t < 4; ++t) out.push_back(random_definite(3));
  out.push_back(sample_interior(catalog("dim4.V2")));
  return out;
}

TEST(StarProperties, CertificatesAndLocalCompleteness) {
  for (const auto& b : star_forms()) {
    auto star = delaunay_star(b);
    std::map<std::vector<LatticeVector>, int> facet_count;
    for (const auto& c : star.cells) {
      auto cert = certify_cell(b, c);
      EXPECT_TRUE(cert.passed()) << to_string(c);
      // Equality set is exactly the vertex set.
      for (const auto& v : c.vertices) {
        RationalVector d = to_rational(v) - *c.center;
        EXPECT_EQ(b.evaluate(d, d), *c.sq_radius);
      }
      for (const auto& f : facets_through_origin(c)) ++facet_count[f];
    }
    for (const auto& [f, n] : facet_count) EXPECT_EQ(n, 2) << "facet shared by " << n << " cells";
  }
}

TEST(StarProperties, TranslationEquivariance) {
  for (const auto& b : star_forms()) {
    auto star = delaunay_star(b);
    std::set<DelaunayCell> reps(star.orbit_reps.begin(), star.orbit_reps.end());
    for (const auto& c : star.cells) {
      for (const auto& v : c.vertices) {
        auto moved = c.translated(-v);
        EXPECT_TRUE(moved.contains_origin());
        EXPECT_EQ(canonical_orbit_rep(moved), canonical_orbit_rep(c));
        EXPECT_TRUE(reps.count(canonical_orbit_rep(moved)));
      }
    }
    // Each orbit of g-simplices contributes g+1 cells at 0.
    std::size_t expected = 0;
    for (const auto& r : star.orbit_reps) expected += r.vertices.size();
    EXPECT_EQ(star.cells.size(), expected);
  }
}

TEST(StarProperties, PermutationEquivariance) {
  for (const auto& b : star_forms()) {
    const std::size_t g = b.rank();
    std::vector<int> p(g);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng());
    Matrix a = permutation(p);
    auto moved = delaunay_star(congruence_act(a, b));
    // x is a vertex for A^T B A iff A x is one for B.
    std::set<DelaunayCell> mapped;
    for (const auto& c : moved.cells) {
      std::vector<LatticeVector> vs;
      for (const auto& v : c.vertices) {
        RationalVector w = a * to_rational(v);
        LatticeVector lv(g);
        for (std::size_t i = 0; i < g; ++i) lv[i] = w[i].get_num().get_si();
        vs.push_back(lv);
      }
      mapped.insert(make_cell(vs));
    }
    auto star = delaunay_star(b);
    EXPECT_EQ(mapped, std::set<DelaunayCell>(star.cells.begin(), star.cells.end()));
  }
}

TEST(GenerationProperties, UnimodularCellsHaveTrivialParallelepiped) {
  auto star = cached_star(sample_interior(catalog("dim4.V3")));
  for (const auto& c : star->cells) {
    ASSERT_TRUE(is_basic_simplex(c));
    auto rays = cone_rays(c).rays;
    EXPECT_EQ(parallelepiped_points(rays), std::vector<LatticeVector>{LatticeVector(4)});
    EXPECT_TRUE(is_totally_generating(c).totally_generating);
  }
}

TEST(GenerationProperties, SemigroupIsClosedUnderAddition) {
  std::vector<std::vector<LatticeVector>> gens = {
      {{1, 0}, {1, 2}}, {{2, 1}, {1, 2}, {1, 1}}, {{1, 0, 0}, {1, 2, 0}, {0, 1, 3}}};
  std::uniform_int_distribution<int> k(0, 3);
  for (const auto& gs : gens) {
    std::vector<LatticeVector> members;
    for (int t = 0; t < 12; ++t) {
      LatticeVector x(gs.front().rank());
      for (const auto& u : gs) x = x + u * k(rng());
      ASSERT_TRUE(in_semigroup(gs, x));
      members.push_back(x);
    }
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
      EXPECT_TRUE(in_semigroup(gs, members[i] + members[i + 1]));
  }
}

TEST(GenerationProperties, CoverCheckIgnoresPieceOrder) {
  auto coarse_star = cached_star(sample_interior(catalog("dim4.V1capV2")));
  auto fine_star = cached_star(sample_interior(catalog("dim4.V1")));
  int fused = 0;
  for (const auto& c : coarse_star->cells) {
    auto pieces = pieces_in(c, fine_star->orbit_reps);
    if (pieces.size() < 2) continue;
    ++fused;
    bool want = cone_cover_check(c, pieces);
    EXPECT_TRUE(want);
    std::reverse(pieces.begin(), pieces.end());
    EXPECT_EQ(cone_cover_check(c, pieces), want);
    std::shuffle(pieces.begin(), pieces.end(), rng());
    EXPECT_EQ(cone_cover_check(c, pieces), want);
  }
  EXPECT_GT(fused, 0);
}

TEST(CatalogProperties, GeneratorsAreMembers) {
  for (const auto& cone : catalog_entries())
    for (std::size_t k = 0; k < cone.generators.size(); ++k)
      EXPECT_TRUE(contains(cone, cone.generators[k]).member) << cone.name << " " << cone.labels[k];
}

TEST(CatalogProperties, VoronoiConeSamplesAreDefiniteAndAgree) {
  for (const char* name : {"dim1.V", "dim2.V1", "dim2.V2", "dim2.V1capV2", "dim3.V"}) {
    const auto& cone = catalog(name);
    auto a = sample_interior(cone), b = sample_interior_alt(cone);
    EXPECT_EQ(definiteness(a), Definiteness::positive_definite) << name;
    EXPECT_EQ(definiteness(b), Definiteness::positive_definite) << name;
    EXPECT_EQ(delaunay_star(a).orbit_reps, delaunay_star(b).orbit_reps) << name;
  }
}

TEST(CatalogProperties, ChamberSidesOfTheSplitGenerators) {
  for (const char* split : {"1234", "1324", "1423", "3412"}) {
    std::string s(split);
    std::string label = "e" + s + "5";
    EXPECT_EQ(chamber_side(s, named_form(4, label)), ChamberSide::first) << label;
  }
}

TEST(FaceProperties, DistinctDropSetsAndCertificates) {
  auto faces = enumerate_faces();
  std::set<DropSet> drops;
  std::set<RationalVector> certs;
  for (const auto& f : faces) {
    drops.insert(f.dropped);
    certs.insert(f.certificate);
  }
  EXPECT_EQ(drops.size(), 64u);
  EXPECT_EQ(certs.size(), 64u);
}

TEST(FaceProperties, GroupActionPreservesFacesAndShapes) {
  auto faces = enumerate_faces();
  std::set<DropSet> all;
  for (const auto& f : faces) all.insert(f.dropped);
  auto group = group_G();
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  auto oc = orbit_classify(faces, group);
  for (int t = 0; t < 200; ++t) {
    const auto& gamma = group[pick(rng())];
    const auto& f = faces[t % faces.size()];
    DropSet image = act(gamma, f.dropped);
    EXPECT_TRUE(all.count(image));
    EXPECT_TRUE(facial_certificate(image).has_value());
    EXPECT_EQ(classify_type(image, oc), classify_type(f.dropped, oc));
  }
  EXPECT_EQ(oc.bf.size() + oc.rt.size(), 64u);
}

TEST(VerifierProperties, TablesAreDeterministicAcrossThreads) {
  const std::string once = io::dump(io::to_json(reproduce_table(2)));
  std::string a, b;
  std::thread ta([&] { a = io::dump(io::to_json(reproduce_table(2))); });
  std::thread tb([&] { b = io::dump(io::to_json(reproduce_table(2))); });
  ta.join();
  tb.join();
  EXPECT_EQ(a, once);
  EXPECT_EQ(b, once);
}

TEST(VerifierProperties, FusionVolumeConservation) {
  for (const auto& [coarse, fine] : std::vector<std::pair<const char*, const char*>>{
           {"dim2.V1capV2", "dim2.V1"}, {"dim2.V1capV2", "dim2.V2"}, {"dim4.V1capV2", "dim4.V1"},
           {"dim4.V1capV2", "dim4.V2"}, {"dim4.V2capV3", "dim4.V2"}, {"dim4.V2capV3", "dim4.V3"},
           {"dim4.W0", "dim4.V3"}, {"dim4.W0", "dim4.V4"}}) {
    auto r = fusion_check(catalog(coarse), catalog(fine));
    EXPECT_TRUE(r.volume_conserved) << coarse << " <- " << fine;
    EXPECT_TRUE(r.ok()) << coarse << " <- " << fine;
    for (const auto& f : r.fusions) {
      Rational sum = 0;
      for (const auto& p : f.pieces) sum += normalized_volume(to_rational(p.vertices));
      EXPECT_EQ(normalized_volume(to_rational(f.coarse.vertices)), sum);
    }
  }
}

}  // namespace
}  // namespace d4

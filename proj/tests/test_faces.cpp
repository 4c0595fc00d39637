#include <gtest/gtest.h>

#include <set>

#include "delaunay4/faces.hpp"
#include "support.hpp"

namespace d4 {
namespace {

SignedPair sp(int p, int q, bool plus) { return {p, q, plus}; }

DropSet drop(SignedPair a, SignedPair b, SignedPair c) {
  DropSet d{a, b, c};
  std::sort(d.begin(), d.end());
  return d;
}

const OrbitClassification& orbits() {
  static const OrbitClassification oc = orbit_classify(enumerate_faces(), group_G());
  return oc;
}

TEST(VoronoiTransform, DifferenceBecomesFourX2Squared) {
  auto image = voronoi_transform(named_form(4, "e12"));
  QuadraticForm want{{0, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  EXPECT_EQ(image, want);
}

TEST(VoronoiTransform, KGeneratorsGoToSignedPairs) {
  std::set<SignedPair> images;
  for (const auto& g : catalog("dim4.K").generators) {
    auto id = identify_signed_pair(voronoi_transform(g));
    ASSERT_TRUE(id);
    images.insert(*id);
  }
  EXPECT_EQ(images.size(), 12u);
}

TEST(VoronoiTransform, X1SquaredByInverseSubstitution) {
  // x1^2 evaluated at T x is (x1 + x2)^2.
  auto image = voronoi_transform(named_form(4, "e15"));
  auto id = identify_signed_pair(image);
  ASSERT_TRUE(id);
  EXPECT_EQ(*id, sp(1, 2, true));
  EXPECT_NE(determinant(voronoi_matrix()), 0);
}

TEST(Faces, SixtyFourSplitEvenly) {
  auto faces = enumerate_faces();
  ASSERT_EQ(faces.size(), 64u);
  int tri = 0, fork = 0;
  for (const auto& f : faces) {
    tri += f.graph.shape() == GraphShape::triangle;
    fork += f.graph.shape() == GraphShape::fork;
  }
  EXPECT_EQ(tri, 32);
  EXPECT_EQ(fork, 32);
}

TEST(Faces, W0DropSet) {
  auto w0 = k_face_of(catalog("dim4.W0"));
  ASSERT_TRUE(w0);
  EXPECT_EQ(*w0, drop(sp(1, 3, true), sp(1, 4, true), sp(3, 4, false)));
  EXPECT_TRUE(facial_certificate(*w0));
}

TEST(Faces, PathAndDisconnectedHaveNoCertificate) {
  auto path = drop(sp(1, 2, true), sp(2, 3, true), sp(3, 4, true));
  EXPECT_EQ(graph_of(path).shape(), GraphShape::path);
  EXPECT_FALSE(facial_certificate(path));
  auto split = drop(sp(1, 2, true), sp(1, 2, false), sp(3, 4, true));
  EXPECT_FALSE(facial_certificate(split));
}

TEST(Faces, BlackTriangleOn134) {
  auto t = drop(sp(1, 3, true), sp(1, 4, true), sp(3, 4, true));
  EXPECT_EQ(graph_of(t).shape(), GraphShape::triangle);
  auto cert = facial_certificate(t);
  ASSERT_TRUE(cert);
  // Zero on kept forms, positive on dropped ones.
  for (const auto& s : all_signed_pairs()) {
    Rational v = dot(*cert, signed_pair_form(s).upper_coords());
    bool dropped = std::find(t.begin(), t.end(), s) != t.end();
    if (dropped) EXPECT_GT(v, 0) << to_string(s);
    else EXPECT_EQ(v, 0) << to_string(s);
  }
}

TEST(GroupG, OrderAndInvolutions) {
  auto g = group_G();
  EXPECT_EQ(g.size(), 1152u);
  Matrix sigma = Matrix::identity(4).scaled(-1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) sigma(i, j) += Rational(1, 2);
  EXPECT_EQ(sigma * sigma, Matrix::identity(4));
  Matrix t12{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(t12 * t12, Matrix::identity(4));
  EXPECT_NE(std::find(g.begin(), g.end(), sigma), g.end());
}

TEST(Orbits, SizesAndMembership) {
  const auto& oc = orbits();
  EXPECT_EQ(oc.orbits.size(), 2u);
  EXPECT_EQ(oc.bf.size(), 48u);
  EXPECT_EQ(oc.rt.size(), 16u);
  auto w0 = *k_face_of(catalog("dim4.W0"));
  Matrix tau1 = Matrix::identity(4);
  tau1(0, 0) = -1;
  auto image = act(tau1, w0);
  EXPECT_EQ(graph_of(image).shape(), GraphShape::triangle);
  for (const auto& e : graph_of(image).edges) EXPECT_TRUE(e.red);
  EXPECT_EQ(classify_type(w0, oc), VoronoiType::III);
  auto v12 = k_face_of(catalog("dim4.V1capV2"));
  ASSERT_TRUE(v12);
  EXPECT_EQ(classify_type(*v12, oc), VoronoiType::II);
}

TEST(Types, TopCones) {
  const auto& oc = orbits();
  auto type_of = [&](const char* face) { return classify_type(*k_face_of(catalog(face)), oc); };
  EXPECT_EQ(type_of("dim4.V2"), VoronoiType::II);
  EXPECT_EQ(type_of("dim4.V3"), VoronoiType::III);
  EXPECT_EQ(type_of("dim4.V4"), VoronoiType::III);
}

}  // namespace
}  // namespace d4

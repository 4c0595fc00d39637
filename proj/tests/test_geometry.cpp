#include <gtest/gtest.h>

#include "delaunay4/geometry.hpp"
#include "support.hpp"

namespace d4 {
namespace {

using test::rv;

TEST(EnumerateEllipsoid, UnitDiskUnderIdentity) {
  auto pts = enumerate_ellipsoid(QuadraticForm::identity(2), rv({0, 0}), 1);
  EXPECT_EQ(pts.size(), 5u);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
}

TEST(EnumerateEllipsoid, MatchesBoxCountForSkewForm) {
  QuadraticForm b{{5, 2}, {2, 1}};
  const Rational bound = 6;
  std::size_t brute = 0;
  for (int x = -20; x <= 20; ++x)
    for (int y = -20; y <= 20; ++y)
      if (b.norm({x, y}) <= bound) ++brute;
  EXPECT_EQ(enumerate_ellipsoid(b, rv({0, 0}), bound).size(), brute);
}

TEST(EnumerateEllipsoid, OffsetCenter) {
  auto pts = enumerate_ellipsoid(QuadraticForm::identity(2), rv({Rational(1, 2), Rational(1, 2)}), Rational(1, 2));
  EXPECT_EQ(pts.size(), 4u);
}

TEST(AffineDimension, Basics) {
  EXPECT_EQ(affine_dimension(std::vector<LatticeVector>{}), -1);
  EXPECT_EQ(affine_dimension(std::vector<LatticeVector>{{1, 1}}), 0);
  EXPECT_EQ(affine_dimension(std::vector<LatticeVector>{{0, 0}, {1, 1}, {2, 2}}), 1);
  EXPECT_EQ(affine_dimension(test::sigma5().vertices), 2);
}

TEST(HyperplaneNormal, PlaneInThreeSpace) {
  auto n = hyperplane_normal({rv({1, 0, 0}), rv({0, 1, 0})}, 3);
  ASSERT_TRUE(n);
  EXPECT_EQ(dot(*n, rv({0, 0, 1})) != 0, true);
  EXPECT_FALSE(hyperplane_normal({rv({1, 0, 0}), rv({2, 0, 0})}, 3));
}

TEST(ConeFacets, Quadrant) {
  auto f = cone_facets({rv({1, 0}), rv({0, 1}), rv({1, 1})});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(in_cone(f, rv({3, 0})));
  EXPECT_FALSE(in_cone_interior(f, rv({3, 0})));
  EXPECT_TRUE(in_cone_interior(f, rv({1, 2})));
  EXPECT_FALSE(in_cone(f, rv({-1, 2})));
}

TEST(NormalizedVolume, BasicAndSquare) {
  EXPECT_EQ(normalized_volume(to_rational(test::sigma1().vertices)), 1);
  EXPECT_EQ(normalized_volume(to_rational(test::sigma5().vertices)), 2);
  std::vector<LatticeVector> big{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  EXPECT_EQ(normalized_volume(to_rational(big)), 8);
}

TEST(PlacingTriangulation, SquareSplitsInTwo) {
  auto t = placing_triangulation(to_rational(test::sigma5().vertices));
  EXPECT_EQ(t.size(), 2u);
  for (const auto& simplex : t) EXPECT_EQ(simplex.size(), 3u);
}

TEST(InteriorsDisjoint, Triangles) {
  auto r = [](const DelaunayCell& c) { return to_rational(c.vertices); };
  EXPECT_TRUE(interiors_disjoint(r(test::sigma1()), r(test::sigma2())));
  EXPECT_TRUE(interiors_disjoint(r(test::sigma3()), r(test::sigma4())));
  EXPECT_FALSE(interiors_disjoint(r(test::sigma1()), r(test::sigma3())));
  EXPECT_FALSE(interiors_disjoint(r(test::sigma5()), r(test::sigma4())));
}

TEST(ConeInteriorsDisjoint, Quadrants) {
  EXPECT_TRUE(cone_interiors_disjoint({rv({1, 0}), rv({1, 1})}, {rv({1, 1}), rv({0, 1})}));
  EXPECT_FALSE(cone_interiors_disjoint({rv({1, 0}), rv({0, 1})}, {rv({1, 1}), rv({0, 1})}));
}

TEST(ForEachSubset, CountsAndStops) {
  int n = 0;
  for_each_subset(5, 2, [&](const std::vector<std::size_t>&) { return ++n, true; });
  EXPECT_EQ(n, 10);
  n = 0;
  for_each_subset(5, 2, [&](const std::vector<std::size_t>&) { return ++n < 3; });
  EXPECT_EQ(n, 3);
}

}  // namespace
}  // namespace d4

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "escobar/error.hpp"
#include "escobar/geometry.hpp"

using namespace escobar;

namespace {

constexpr double kPi = std::numbers::pi;

PlanarDomain unit_square() {
  const Vec2 pts[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return PlanarDomain::make_polygon(pts);
}

PlanarDomain l_shape() {
  const Vec2 pts[] = {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  return PlanarDomain::make_polygon(pts);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

}  // namespace

TEST(Geometry, SquareBasics) {
  const PlanarDomain d = unit_square();
  EXPECT_EQ(d.edge_count(), 4u);
  EXPECT_DOUBLE_EQ(d.perimeter(), 4.0);
  EXPECT_DOUBLE_EQ(d.area(), 1.0);
  for (double a : d.interior_angles()) EXPECT_NEAR(a, kPi / 2, 1e-15);
  EXPECT_EQ(d.corners().size(), 4u);
  EXPECT_EQ(d.shape(), DomainShape::kRegularPolygon);
}

TEST(Geometry, ClockwiseInputIsReversed) {
  const Vec2 cw[] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  const PlanarDomain d = PlanarDomain::make_polygon(cw);
  EXPECT_GT(d.area(), 0.0);
  EXPECT_DOUBLE_EQ(d.area(), 1.0);
}

TEST(Geometry, DiskHasNoCorners) {
  const PlanarDomain d = PlanarDomain::make_disk(2.0);
  EXPECT_NEAR(d.perimeter(), 4.0 * kPi, 1e-14);
  EXPECT_NEAR(d.area(), 4.0 * kPi, 1e-13);
  EXPECT_TRUE(d.corners().empty());
  EXPECT_FALSE(d.sharpest_corner().has_value());
  EXPECT_EQ(d.shape(), DomainShape::kDisk);
  EXPECT_EQ(d.rotation_order(), 0);
}

TEST(Geometry, RegularPolygonMetadata) {
  for (int n = 3; n <= 12; ++n) {
    const PlanarDomain d = PlanarDomain::make_regular_polygon(n);
    EXPECT_EQ(d.regular_sides(), n);
    EXPECT_NEAR(d.perimeter(), 2.0 * n * std::sin(kPi / n), 1e-13);
    EXPECT_NEAR(d.area(), 0.5 * n * std::sin(2.0 * kPi / n), 1e-13);
    EXPECT_NEAR(d.sharpest_corner()->angle, kPi - 2.0 * kPi / n, 1e-13);
  }
}

TEST(Geometry, EquilateralPolygonIsRecognized) {
  const Vec2 pts[] = {{3, 1}, {5, 1}, {5, 3}, {3, 3}};
  const PlanarDomain d = PlanarDomain::make_polygon(pts);
  EXPECT_EQ(d.shape(), DomainShape::kRegularPolygon);
  EXPECT_EQ(d.rotation_order(), 4);
  const Vec2 rect[] = {{0, 0}, {2, 0}, {2, 1}, {0, 1}};
  EXPECT_EQ(PlanarDomain::make_polygon(rect).shape(), DomainShape::kGeneric);
}

TEST(Geometry, CollinearVerticesCollapse) {
  const Vec2 pts[] = {{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}};
  const PlanarDomain d = PlanarDomain::make_polygon(pts);
  EXPECT_EQ(d.edge_count(), 4u);
  GeometryOptions keep;
  keep.collapse_collinear = false;
  EXPECT_EQ(code_of([&] { PlanarDomain::make_polygon(pts, keep); }), ErrorCode::kInvalidGeometry);
}

TEST(Geometry, RejectsSelfIntersection) {
  const Vec2 bowtie[] = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  try {
    PlanarDomain::make_polygon(bowtie);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidGeometry);
    EXPECT_TRUE(e.edge_index().has_value());
  }
}

TEST(Geometry, RejectsOpenBoundaryWithEdgeIndex) {
  std::vector<BoundaryEdge> edges = {BoundaryEdge::segment({0, 0}, {1, 0}),
                                     BoundaryEdge::segment({1, 0}, {1, 1}),
                                     BoundaryEdge::segment({1, 1}, {0, 0.5})};
  try {
    PlanarDomain d(edges);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidGeometry);
    EXPECT_EQ(e.edge_index(), 2u);
  }
}

TEST(Geometry, ArclengthRoundTrip) {
  const PlanarDomain d = l_shape();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, d.perimeter());
  for (int i = 0; i < 200; ++i) {
    const double s = u(rng);
    const BoundaryPoint p = d.anchor(s);
    EXPECT_NEAR(d.arclength(p), s, 1e-12);
    const BoundaryPoint back = d.locate(d.point_at(s));
    EXPECT_NEAR(norm(d.point_at(back) - d.point_at(s)), 0.0, 1e-12);
  }
}

TEST(Geometry, WrapKeepsPointsBeforeOrigin) {
  const PlanarDomain d = unit_square();
  const double just_before = std::nextafter(d.perimeter(), 0.0);
  EXPECT_LT(d.wrap(just_before), d.perimeter());
  EXPECT_LT(d.wrap(-1e-300), d.perimeter());
  EXPECT_DOUBLE_EQ(d.wrap(d.perimeter()), 0.0);
}

TEST(Geometry, ForwardSpanIsComplementary) {
  const PlanarDomain d = PlanarDomain::make_regular_polygon(5);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, d.perimeter());
  for (int i = 0; i < 100; ++i) {
    const BoundaryPoint a = d.anchor(u(rng));
    const BoundaryPoint b = d.anchor(u(rng));
    if (a == b) continue;
    EXPECT_NEAR(d.forward_span(a, b) + d.forward_span(b, a), d.perimeter(), 1e-12);
  }
}

TEST(Geometry, ContainsPoint) {
  const PlanarDomain d = l_shape();
  EXPECT_TRUE(d.contains({0.5, 0.5}));
  EXPECT_TRUE(d.contains({1.5, 0.5}));
  EXPECT_FALSE(d.contains({1.5, 1.5}));
  EXPECT_FALSE(d.contains({-0.1, 0.5}));
  const PlanarDomain disk = PlanarDomain::make_disk();
  EXPECT_TRUE(disk.contains({0.99, 0.0}));
  EXPECT_FALSE(disk.contains({0.8, 0.8}));
}

TEST(Geometry, ChordInteriorConvex) {
  const PlanarDomain d = unit_square();
  EXPECT_TRUE(d.chord_is_interior(d.anchor(0.5), d.anchor(2.5)));
  EXPECT_TRUE(d.chord_is_interior(d.anchor(0.5), d.anchor(1.5)));
  // Chord along an edge lies on the boundary.
  EXPECT_FALSE(d.chord_is_interior(d.anchor(0.2), d.anchor(0.8)));
  // Vertex to vertex along an edge.
  EXPECT_FALSE(d.chord_is_interior(d.anchor(0.0), d.anchor(1.0)));
  // Diagonal.
  EXPECT_TRUE(d.chord_is_interior(d.anchor(0.0), d.anchor(2.0)));
}

TEST(Geometry, ChordInteriorIsSymmetric) {
  const PlanarDomain d = l_shape();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, d.perimeter());
  for (int i = 0; i < 300; ++i) {
    const BoundaryPoint a = d.anchor(u(rng));
    const BoundaryPoint b = d.anchor(u(rng));
    if (std::abs(d.arclength(a) - d.arclength(b)) < 1e-6) continue;
    EXPECT_EQ(d.chord_is_interior(a, b), d.chord_is_interior(b, a));
  }
}

TEST(Geometry, ChordAcrossNotchIsRejected) {
  const PlanarDomain d = l_shape();
  // (2, 0.5) to (0.5, 2) passes through the missing quadrant.
  const BoundaryPoint a = d.locate({2, 0.5});
  const BoundaryPoint b = d.locate({0.5, 2});
  EXPECT_FALSE(d.chord_is_interior(a, b));
  // (2, 0.5) to (0, 0.5) stays in the lower arm.
  EXPECT_TRUE(d.chord_is_interior(a, d.locate({0, 0.5})));
  // Through the reflex vertex (1,1) from (2,0) to (0,2): touches the boundary.
  EXPECT_FALSE(d.chord_is_interior(d.locate({2, 0}), d.locate({0, 2})));
}

TEST(Geometry, ChordInteriorOnDisk) {
  const PlanarDomain d = PlanarDomain::make_disk();
  EXPECT_TRUE(d.chord_is_interior(d.anchor(0.1), d.anchor(3.0)));
  EXPECT_TRUE(d.chord_is_interior(d.anchor(0.0), d.anchor(1e-7)));
}

TEST(Geometry, CoincidentChordEndsThrow) {
  const PlanarDomain d = unit_square();
  EXPECT_EQ(code_of([&] { d.chord_is_interior(d.anchor(0.3), d.anchor(0.3)); }),
            ErrorCode::kInvalidParameter);
}

TEST(Geometry, CornerLocalChordsAtExtremeScales) {
  const PlanarDomain d = unit_square();
  for (double t : {1e-3, 1e-30, 1e-120, 1e-280}) {
    const BoundaryPoint a{0, -t};
    const BoundaryPoint b{0, t};
    EXPECT_TRUE(d.chord_is_interior(a, b)) << t;
    EXPECT_NEAR(norm(d.displacement(a, b)) / (2.0 * t), std::sqrt(0.5), 1e-14) << t;
  }
}

TEST(Geometry, ChordsCross) {
  const PlanarDomain d = unit_square();
  EXPECT_TRUE(d.chords_cross(d.anchor(0.5), d.anchor(2.5), d.anchor(1.5), d.anchor(3.5)));
  EXPECT_FALSE(d.chords_cross(d.anchor(0.2), d.anchor(0.8 + 3.0), d.anchor(1.2), d.anchor(2.8)));
  // Sharing an endpoint is not a crossing.
  EXPECT_FALSE(d.chords_cross(d.anchor(0.5), d.anchor(2.5), d.anchor(2.5), d.anchor(3.5)));
}

TEST(Geometry, CurvilinearPolygon) {
  const Vec2 pts[] = {{-1, 0}, {1, 0}};
  const double sweeps[] = {0.0, kPi};
  const PlanarDomain half = PlanarDomain::make_curvilinear_polygon(pts, sweeps);
  EXPECT_NEAR(half.perimeter(), 2.0 + kPi, 1e-14);
  EXPECT_NEAR(half.area(), kPi / 2, 1e-14);
  ASSERT_EQ(half.corners().size(), 2u);
  for (const Corner& c : half.corners()) EXPECT_NEAR(c.angle, kPi / 2, 1e-12);
  EXPECT_TRUE(half.contains({0.0, 0.5}));
  EXPECT_FALSE(half.contains({0.0, -0.1}));
}

TEST(Geometry, InwardBulgeReducesArea) {
  const Vec2 pts[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const double dent[] = {-0.5, 0.0, 0.0, 0.0};
  const PlanarDomain d = PlanarDomain::make_curvilinear_polygon(pts, dent);
  const double r = 0.5 / std::sin(0.25);
  EXPECT_NEAR(d.area(), 1.0 - 0.5 * r * r * (0.5 - std::sin(0.5)), 1e-14);
  EXPECT_FALSE(d.contains({0.5, 0.01}));
}

TEST(Geometry, ScaledKeepsShapeAndMetadata) {
  const PlanarDomain d = PlanarDomain::make_regular_polygon(6);
  const PlanarDomain big = d.scaled(1e6);
  EXPECT_NEAR(big.perimeter(), 1e6 * d.perimeter(), 1e-6);
  EXPECT_EQ(big.shape(), DomainShape::kRegularPolygon);
  EXPECT_EQ(big.regular_sides(), 6);
}

TEST(Geometry, InvalidParameters) {
  EXPECT_EQ(code_of([] { PlanarDomain::make_regular_polygon(2); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { PlanarDomain::make_disk(-1.0); }), ErrorCode::kInvalidParameter);
  const Vec2 two[] = {{0, 0}, {1, 0}};
  EXPECT_EQ(code_of([&] { PlanarDomain::make_polygon(two); }), ErrorCode::kInvalidGeometry);
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "escobar/constructions.hpp"
#include "escobar/exact.hpp"
#include "escobar/regions.hpp"

using namespace escobar;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no escobar::Error thrown";
  return ErrorCode::kParse;
}

}  // namespace

TEST(Exact, DiskTable) {
  EXPECT_DOUBLE_EQ(ik_disk(1), 0.0);
  EXPECT_NEAR(ik_disk(2), 2.0 / kPi, 1e-15);
  EXPECT_NEAR(ik_disk(3), 0.826993343132688, 1e-14);
  EXPECT_NEAR(ik_disk(4), 2.0 * std::sqrt(2.0) / kPi, 1e-15);
  EXPECT_NEAR(ik_disk(6), 3.0 / kPi, 1e-15);
  EXPECT_EQ(code_of([] { ik_disk(0); }), ErrorCode::kInvalidParameter);
}

TEST(Exact, DiskIncreasesTowardOne) {
  double prev = -1.0;
  for (int k = 1; k <= 200; ++k) {
    const double v = ik_disk(k);
    EXPECT_GT(v, prev);
    EXPECT_LT(v, 1.0);
    prev = v;
  }
  EXPECT_NEAR(ik_disk(200), 1.0, 1e-4);
}

TEST(Exact, RegularPolygonDivisors) {
  const BoundValue sq2 = ik_regular_polygon(4, 2);
  EXPECT_EQ(sq2.kind, BoundKind::kExact);
  EXPECT_NEAR(sq2.value, 0.5, 1e-15);
  EXPECT_NEAR(ik_regular_polygon(6, 3).value, 0.75, 1e-15);
  EXPECT_NEAR(ik_regular_polygon(6, 2).value, std::sqrt(3.0) / 3.0, 1e-15);
  EXPECT_NEAR(ik_regular_polygon(8, 1).value, 0.0, 0.0);
}

TEST(Exact, RegularPolygonManyRegions) {
  for (int n = 3; n <= 12; ++n) {
    for (int k = n; k <= n + 3; ++k) {
      const BoundValue b = ik_regular_polygon(n, k);
      EXPECT_EQ(b.kind, BoundKind::kExact);
      EXPECT_NEAR(b.value, std::cos(kPi / n), 1e-15);
    }
  }
}

TEST(Exact, DivisorValueMatchesInscribedTuple) {
  for (int n = 4; n <= 12; ++n) {
    const PlanarDomain d = PlanarDomain::make_regular_polygon(n);
    for (int k = 2; k < n; ++k) {
      if (n % k != 0) continue;
      EXPECT_NEAR(max_eta(d, inscribed_kgon_tuple(n, k)), ik_regular_polygon(n, k).value, 1e-12)
          << n << " " << k;
    }
  }
}

TEST(Exact, NonDivisorIsUpperBound) {
  const BoundValue b = ik_regular_polygon(7, 3);
  EXPECT_EQ(b.kind, BoundKind::kUpperBound);
  EXPECT_LE(b.value, std::cos(kPi / 7) + 1e-15);
  EXPECT_EQ(code_of([] { ik_regular_polygon(2, 3); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { ik_regular_polygon(5, 0); }), ErrorCode::kInvalidParameter);
}

TEST(Exact, PolygonCornerBound) {
  const Vec2 sq[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_NEAR(polygon_upper_bound(PlanarDomain::make_polygon(sq)), std::sin(kPi / 4), 1e-15);
  EXPECT_NEAR(polygon_upper_bound(PlanarDomain::make_regular_polygon(3)), 0.5, 1e-12);
  const Vec2 thin[] = {{0, 0}, {4, 0}, {0, 1}};
  EXPECT_NEAR(polygon_upper_bound(PlanarDomain::make_polygon(thin)),
              std::sin(0.5 * std::atan2(1.0, 4.0)), 1e-12);
  EXPECT_EQ(code_of([] { polygon_upper_bound(PlanarDomain::make_disk()); }),
            ErrorCode::kNotApplicable);
}

TEST(Exact, MonotoneCheck) {
  std::vector<std::pair<int, double>> rows;
  for (int k = 1; k <= 12; ++k) rows.emplace_back(k, ik_regular_polygon(12, k).value);
  EXPECT_FALSE(ik_monotone_check(rows).has_value());

  rows = {{2, 0.5}, {3, 0.7}, {4, 0.6}, {5, 0.9}};
  const auto v = ik_monotone_check(rows);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->index, 2u);
  EXPECT_EQ(v->k, 4);
  EXPECT_DOUBLE_EQ(v->previous, 0.7);
  rows = {{2, 0.5}, {3, 0.5 - 1e-12}};
  EXPECT_FALSE(ik_monotone_check(rows).has_value());
}

TEST(Exact, DiskDominatesDivisorCases) {
  for (int n = 3; n <= 24; ++n) {
    for (int k = 2; k < n; ++k) {
      if (n % k == 0) EXPECT_TRUE(disk_dominance_check(n, k)) << n << " " << k;
    }
  }
}

TEST(Exact, KnownValues) {
  const auto disk = known_exact_value(PlanarDomain::make_disk(2.0), 3);
  ASSERT_TRUE(disk.has_value());
  EXPECT_NEAR(disk->value, ik_disk(3), 1e-15);
  const auto hex = known_exact_value(PlanarDomain::make_regular_polygon(6), 3);
  ASSERT_TRUE(hex.has_value());
  EXPECT_NEAR(hex->value, 0.75, 1e-15);
  EXPECT_FALSE(known_exact_value(PlanarDomain::make_regular_polygon(7), 3).has_value());
  const Vec2 l[] = {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  EXPECT_FALSE(known_exact_value(PlanarDomain::make_polygon(l), 3).has_value());
}

TEST(Exact, BoundKindNames) {
  EXPECT_STREQ(to_string(BoundKind::kExact), "Exact");
  EXPECT_STREQ(to_string(BoundKind::kUpperBound), "UpperBound");
  EXPECT_STREQ(to_string(BoundKind::kEstimate), "Estimate");
}

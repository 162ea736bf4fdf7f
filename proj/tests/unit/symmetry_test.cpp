#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "escobar/symmetry.hpp"

using namespace escobar;

namespace {

constexpr double kPi = std::numbers::pi;

double side(int n) { return 2.0 * std::sin(kPi / n); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no escobar::Error thrown";
  return ErrorCode::kParse;
}

AuditConfig small_audit() {
  AuditConfig cfg;
  cfg.samples = 200;
  cfg.seed = 9;
  return cfg;
}

}  // namespace

TEST(SymmetricCap, OneEdgeLength) {
  for (int n = 3; n <= 10; ++n) {
    const double s = side(n);
    EXPECT_NEAR(symmetric_eta(n, s, SymmetryCenter::kVertex), std::cos(kPi / n), 1e-13) << n;
    const PlanarDomain d = PlanarDomain::make_regular_polygon(n);
    const SymmetrizedRegion r = symmetrize(d, symmetric_cap(d, s, SymmetryCenter::kVertex));
    EXPECT_TRUE(r.type_one_degenerate);
    EXPECT_FALSE(r.type_two_degenerate);
    EXPECT_NEAR(r.type_one_eta, 1.0, 1e-13);
  }
}

TEST(SymmetricCap, TwoEdgeLengths) {
  for (int n = 5; n <= 12; ++n) {
    const double c = std::cos(kPi / n);
    EXPECT_NEAR(symmetric_eta(n, 2 * side(n), SymmetryCenter::kEdgeMidpoint), c * c, 1e-13);
    EXPECT_NEAR(symmetric_eta(n, 2 * side(n), SymmetryCenter::kVertex), c, 1e-13);
  }
}

TEST(SymmetricCap, ExteriorLengthIsExact) {
  const PlanarDomain d = PlanarDomain::make_regular_polygon(7);
  for (double frac : {0.1, 0.5, 1.3, 2.7, 3.4}) {
    for (SymmetryCenter c : {SymmetryCenter::kEdgeMidpoint, SymmetryCenter::kVertex}) {
      EXPECT_NEAR(exterior_length(d, symmetric_cap(d, frac * side(7), c)), frac * side(7), 1e-13);
    }
  }
}

TEST(Symmetrize, KeepsExteriorLength) {
  const PlanarDomain d = PlanarDomain::make_regular_polygon(5);
  const Cap base{d.anchor(0.3), d.anchor(0.3 + 1.5 * side(5))};
  const SymmetrizedRegion r = symmetrize(d, base);
  EXPECT_NEAR(r.exterior, 1.5 * side(5), 1e-13);
  EXPECT_NEAR(exterior_length(d, r.type_one), r.exterior, 1e-13);
  EXPECT_NEAR(exterior_length(d, r.type_two), r.exterior, 1e-13);
  EXPECT_NEAR(r.base_eta, eta_partial(d, base), 1e-15);
  EXPECT_LE(std::min(r.type_one_eta, r.type_two_eta), r.base_eta + kAuditMargin);
}

TEST(Symmetrize, NotApplicable) {
  const PlanarDomain disk = PlanarDomain::make_disk();
  EXPECT_EQ(code_of([&] { symmetrize(disk, Cap{disk.anchor(0), disk.anchor(1)}); }),
            ErrorCode::kNotApplicable);
  const PlanarDomain d = PlanarDomain::make_regular_polygon(6);
  EXPECT_EQ(code_of([&] { symmetrize(d, Cap{d.anchor(0), d.anchor(4.0)}); }),
            ErrorCode::kNotApplicable);
}

TEST(Symmetrize, InequalityOnRandomCaps) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 9; ++n) {
    const PlanarDomain d = PlanarDomain::make_regular_polygon(n);
    std::uniform_real_distribution<double> start(0.0, d.perimeter());
    std::uniform_real_distribution<double> len(1e-3, 0.5 * d.perimeter());
    for (int i = 0; i < 200; ++i) {
      const double a = start(rng);
      const CheckResult r = symmetrization_inequality_check(d, Cap{d.anchor(a), d.anchor(a + len(rng))});
      EXPECT_TRUE(r.ok) << n << " " << r.detail;
    }
  }
}

TEST(Monotonicity, LongerCapsHaveSmallerRatio) {
  for (int n = 3; n <= 8; ++n) {
    const double half = n * side(n) / 2;
    for (double a = 0.05; a < half; a += 0.1) {
      EXPECT_TRUE(monotonicity_check(n, a, std::min(half, a + 0.07)).ok) << n << " " << a;
    }
  }
}

TEST(Crossover, ClosedFormMatchesBisection) {
  for (int n = 3; n <= 12; ++n) {
    const double s = side(n);
    const double c = std::cos(kPi / n);
    EXPECT_NEAR(crossover_threshold(n), 2 * s * (1 + c) / (1 + 2 * c), 1e-15);
    EXPECT_NEAR(bisect_crossover(n), crossover_threshold(n), 1e-9 * s) << n;
    EXPECT_GT(crossover_threshold(n), s);
    EXPECT_LT(crossover_threshold(n), 2 * s);
  }
}

TEST(Crossover, QuotedConstantDisagreesWithGeometry) {
  for (int n = 4; n <= 12; ++n) {
    const double quoted = published_crossover_constant(n);
    const double gap = symmetric_eta(n, quoted, SymmetryCenter::kEdgeMidpoint) -
                       symmetric_eta(n, quoted, SymmetryCenter::kVertex);
    EXPECT_GT(std::abs(gap), 1e-3) << n;
    EXPECT_GT(std::abs(quoted - crossover_threshold(n)), 1e-3 * side(n));
  }
}

TEST(Crossover, SignContract) {
  for (int n = 3; n <= 10; ++n) {
    const double s = side(n);
    for (double f = 1.0; f <= 2.0; f += 0.05) {
      EXPECT_TRUE(crossover_check(n, f * s).ok) << n << " " << f;
    }
    EXPECT_EQ(code_of([&] { crossover_check(n, 2.5 * s); }), ErrorCode::kNotApplicable);
  }
}

TEST(LowerEnvelope, ClosedForm) {
  EXPECT_NEAR(lower_envelope(6, 3 * side(6)), std::sqrt(3.0) / 3, 1e-13);
  EXPECT_NEAR(lower_envelope(4, 2 * side(4)), 0.5, 1e-13);
  for (int n = 3; n <= 12; ++n) {
    for (int j = 1; 2 * j <= n; ++j) {
      const double expect = std::sin(j * kPi / n) / std::tan(kPi / n) / j;
      EXPECT_NEAR(lower_envelope(n, j * side(n)), expect, 1e-12) << n << " " << j;
    }
  }
  EXPECT_EQ(code_of([] { lower_envelope(6, 1.5 * side(6)); }), ErrorCode::kNotApplicable);
  EXPECT_EQ(code_of([] { lower_envelope(6, 4 * side(6)); }), ErrorCode::kNotApplicable);
}

TEST(Audit, SuitesPass) {
  const AuditConfig cfg = small_audit();
  for (int n : {3, 4, 5, 8}) {
    for (const SuiteReport& r : symmetry_audit(n, cfg)) {
      EXPECT_TRUE(r.ok()) << r.name << " n=" << n << " " << r.worst_detail;
      EXPECT_GE(r.samples, cfg.samples);
      EXPECT_LE(r.samples, cfg.samples + 1);
      EXPECT_EQ(r.n, n);
    }
  }
  EXPECT_EQ(symmetry_audit(6, cfg).size(), 3u + 3u);
}

TEST(Audit, Reproducible) {
  AuditConfig one = small_audit();
  one.threads = 1;
  AuditConfig many = small_audit();
  many.threads = 4;
  const SuiteReport a = audit_symmetrization(7, one);
  const SuiteReport b = audit_symmetrization(7, many);
  EXPECT_EQ(a.worst_margin, b.worst_margin);
  EXPECT_EQ(a.worst_detail, b.worst_detail);
}

TEST(Audit, EnvelopeWitnessIsTight) {
  const SuiteReport r = lower_envelope_check(6, 3 * side(6), small_audit());
  EXPECT_TRUE(r.ok());
  EXPECT_NEAR(r.worst_margin, 0.0, 1e-12);
}

TEST(SymmetryCenter, Names) {
  EXPECT_STRNE(to_string(SymmetryCenter::kEdgeMidpoint), to_string(SymmetryCenter::kVertex));
}

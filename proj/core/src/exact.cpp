#include "escobar/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "escobar/constructions.hpp"
#include "escobar/regions.hpp"

namespace escobar {
namespace {

constexpr double kPi = std::numbers::pi;

void require_nk(int n, int k) {
  if (n < 3) throw Error(ErrorCode::kInvalidParameter, "regular polygon needs n >= 3");
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be at least 1");
}

}  // namespace

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExact:
      return "Exact";
    case BoundKind::kUpperBound:
      return "UpperBound";
    case BoundKind::kEstimate:
      return "Estimate";
  }
  return "unknown";
}

double ik_disk(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be at least 1");
  if (k == 1) return 0.0;
  const double x = kPi / k;
  return std::sin(x) / x;
}

BoundValue ik_regular_polygon(int n, int k) {
  require_nk(n, k);
  const double corner = std::cos(kPi / n);
  if (k >= n) return {corner, BoundKind::kExact, "regular:k>=n"};
  if (n % k == 0) {
    const double v = k == 1 ? 0.0 : std::sin(kPi / k) / std::tan(kPi / n) * k / n;
    return {v, BoundKind::kExact, "regular:k|n"};
  }
  const PlanarDomain d = PlanarDomain::make_regular_polygon(n);
  const TupleCandidate t = equal_boundary_tuple(d, k);
  const double candidate = max_eta(d, t);
  if (candidate < corner) return {candidate, BoundKind::kUpperBound, "equal-boundary"};
  return {corner, BoundKind::kUpperBound, "corner-bound"};
}

double polygon_upper_bound(const PlanarDomain& domain) {
  double best = std::numeric_limits<double>::infinity();
  for (const Corner& c : domain.corners()) {
    if (c.angle < kPi) best = std::min(best, c.angle);
  }
  if (!std::isfinite(best)) {
    throw Error(ErrorCode::kNotApplicable, "no corner with interior angle below pi");
  }
  return std::sin(0.5 * best);
}

std::optional<MonotoneViolation> ik_monotone_check(std::span<const std::pair<int, double>> values,
                                                   double tolerance) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].second < values[i - 1].second - tolerance) {
      return MonotoneViolation{i, values[i].first, values[i - 1].second, values[i].second};
    }
  }
  return std::nullopt;
}

bool disk_dominance_check(int n, int k) {
  return ik_regular_polygon(n, k).value <= ik_disk(k) + kTauNum;
}

std::optional<BoundValue> known_exact_value(const PlanarDomain& domain, int k) {
  if (k < 1) return std::nullopt;
  if (domain.shape() == DomainShape::kDisk) {
    return BoundValue{ik_disk(k), BoundKind::kExact, "disk"};
  }
  if (domain.shape() == DomainShape::kRegularPolygon) {
    const int n = domain.regular_sides();
    if (k >= n || n % k == 0) return ik_regular_polygon(n, k);
  }
  return std::nullopt;
}

}  // namespace escobar

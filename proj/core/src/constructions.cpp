#include "escobar/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace escobar {
namespace {

constexpr double kPi = std::numbers::pi;

void require_valid(const PlanarDomain& domain, const TupleCandidate& tuple, const char* what) {
  const auto violations = validate_tuple(domain, tuple);
  if (violations.empty()) return;
  const ViolationReport& v = violations.front();
  throw Error(ErrorCode::kConstructionFailure,
              std::string(what) + ": region " + std::to_string(v.first) +
                  (v.second != v.first ? " vs " + std::to_string(v.second) : std::string()) +
                  " " + to_string(v.predicate) + " (" + v.detail + ")");
}

}  // namespace

std::vector<double> corner_legs(int k, double epsilon, DeltaSchedule schedule) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "epsilon must lie in (0, 1)");
  }
  std::vector<double> legs(static_cast<std::size_t>(k));
  double sum = 1.0;
  legs[0] = epsilon;
  for (int j = 1; j < k; ++j) {
    const int denom = schedule == DeltaSchedule::kFine ? k - j + 2 : k - j + 1;
    sum += std::pow(epsilon, -1.0 / denom);
    legs[static_cast<std::size_t>(j)] = epsilon * sum;
  }
  return legs;
}

TupleCandidate corner_tuple_from_legs(std::size_t corner, std::span<const double> legs) {
  TupleCandidate t;
  t.regions.reserve(legs.size());
  auto cap = [corner](double leg) {
    return Cap{BoundaryPoint{corner, -leg}, BoundaryPoint{corner, leg}};
  };
  for (std::size_t j = 0; j < legs.size(); ++j) {
    if (j == 0) {
      t.regions.emplace_back(cap(legs[0]));
    } else {
      t.regions.emplace_back(Strip{cap(legs[j - 1]), cap(legs[j])});
    }
  }
  return t;
}

TupleCandidate corner_tuple(const PlanarDomain& domain, const CornerScheduleParams& params) {
  if (params.corner >= domain.edge_count()) {
    throw Error(ErrorCode::kInvalidParameter, "corner index out of range");
  }
  const double theta = domain.junction_angles()[params.corner];
  if (!(theta < kPi - domain.tau())) {
    throw Error(ErrorCode::kNotApplicable, "corner angle is not below pi");
  }
  double eps = params.epsilon;
  for (int attempt = 0; attempt <= params.max_shrinks; ++attempt, eps *= 0.5) {
    const std::vector<double> legs = corner_legs(params.k, eps, params.schedule);
    TupleCandidate t = corner_tuple_from_legs(params.corner, legs);
    if (validate_tuple(domain, t).empty()) return t;
  }
  throw Error(ErrorCode::kConstructionFailure,
              "corner schedule leaves the domain after " + std::to_string(params.max_shrinks) +
                  " halvings of epsilon");
}

TupleCandidate disk_equal_arc_tuple(int k, double offset) {
  if (k < 2) throw Error(ErrorCode::kInvalidParameter, "k must be at least 2");
  return equal_boundary_tuple(PlanarDomain::make_disk(1.0), k, offset);
}

TupleCandidate inscribed_kgon_tuple(int n, int k) {
  if (n < 3) throw Error(ErrorCode::kInvalidParameter, "regular polygon needs n >= 3");
  if (k < 2) throw Error(ErrorCode::kInvalidParameter, "k must be at least 2");
  if (n % k != 0) throw Error(ErrorCode::kNotApplicable, "k must divide n");
  const std::size_t step = static_cast<std::size_t>(n / k);
  const double half_edge = std::sin(kPi / n);
  TupleCandidate t;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    const std::size_t from = i * step;
    const std::size_t to = ((i + 1) * step) % static_cast<std::size_t>(n);
    t.regions.emplace_back(Cap{{from, half_edge}, {to, half_edge}});
  }
  return t;
}

double default_equal_boundary_offset(const PlanarDomain& domain) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < domain.edge_count(); ++i) {
    if (domain.edges()[i].length() > domain.edges()[best].length()) best = i;
  }
  return domain.junction_arclength(best) + 0.5 * domain.edges()[best].length();
}

TupleCandidate equal_boundary_tuple(const PlanarDomain& domain, int k,
                                    std::optional<double> start_offset) {
  if (k < 2) throw Error(ErrorCode::kInvalidParameter, "k must be at least 2");
  const double offset = start_offset.value_or(default_equal_boundary_offset(domain));
  const double step = domain.perimeter() / k;
  std::vector<BoundaryPoint> cuts;
  cuts.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cuts.push_back(domain.anchor(offset + step * i));
  TupleCandidate t;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    t.regions.emplace_back(Cap{cuts[i], cuts[(i + 1) % cuts.size()]});
  }
  require_valid(domain, t, "equal-boundary tuple");
  return t;
}

TupleCandidate stripe_tuple(const PlanarDomain& rectangle, int k, double stripe_height) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be at least 1");
  if (!(stripe_height > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "stripe height must be positive");
  }
  const auto edges = rectangle.edges();
  bool is_rectangle = edges.size() == 4;
  for (std::size_t i = 0; is_rectangle && i < 4; ++i) {
    is_rectangle = edges[i].is_segment() &&
                   std::abs(rectangle.junction_angles()[i] - 0.5 * kPi) <= 1e-12;
  }
  if (!is_rectangle) throw Error(ErrorCode::kInvalidParameter, "domain is not a rectangle");

  const std::size_t p = edges[1].length() > edges[0].length() ? 1 : 0;
  const std::size_t q = p + 2;
  const double height = edges[p].length();
  const double total = stripe_height * k;
  const double slack = 1e-12 * height;
  if (total > height + slack) {
    throw Error(ErrorCode::kInvalidParameter, "stripes do not fit in the rectangle");
  }

  // Cap beyond level y towards the far end of edge p, and its complement.
  auto far_cap = [&](double y) { return Cap{{p, y}, {q, height - y}}; };
  auto near_cap = [&](double y) { return Cap{{q, height - y}, {p, y}}; };

  TupleCandidate t;
  const double base = 0.5 * (height - total);
  for (int i = 0; i < k; ++i) {
    const double y0 = base + stripe_height * i;
    const double y1 = y0 + stripe_height;
    const bool touches_near = y0 <= slack;
    const bool touches_far = y1 >= height - slack;
    if (touches_near && touches_far) {
      throw Error(ErrorCode::kInvalidParameter,
                  "stripe covers the whole rectangle and has no interior boundary");
    }
    if (touches_far) {
      t.regions.emplace_back(far_cap(y0));
    } else if (touches_near) {
      t.regions.emplace_back(near_cap(y1));
    } else {
      t.regions.emplace_back(Strip{far_cap(y1), far_cap(y0)});
    }
  }
  require_valid(rectangle, t, "stripe tuple");
  return t;
}

}  // namespace escobar

#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "escobar/geometry.hpp"

namespace escobar {

/// Tolerance for comparisons between closed-form values.
inline constexpr double kTauNum = 1e-9;

enum class BoundKind { kExact, kUpperBound, kEstimate };

const char* to_string(BoundKind kind);

struct BoundValue {
  double value = 0.0;
  BoundKind kind = BoundKind::kEstimate;
  std::string provenance;
};

/// sin(π/k)/(π/k); k = 1 gives 0.
double ik_disk(int k);

/// Exact for k ≥ n and for k dividing n, otherwise an upper bound from the
/// equal-boundary candidate started at an edge midpoint.
BoundValue ik_regular_polygon(int n, int k);

/// sin(θ/2) for the smallest corner angle θ below π.
double polygon_upper_bound(const PlanarDomain& domain);

struct MonotoneViolation {
  std::size_t index = 0;  // position of the offending entry
  int k = 0;
  double previous = 0.0;
  double value = 0.0;
};

/// Checks that values sorted by k never decrease by more than `tolerance`.
std::optional<MonotoneViolation> ik_monotone_check(std::span<const std::pair<int, double>> values,
                                                   double tolerance = kTauNum);

/// ik_regular_polygon(n, k).value ≤ ik_disk(k) + kTauNum.
bool disk_dominance_check(int n, int k);

/// Known exact I_k of a disk or regular polygon domain, if one is proven.
std::optional<BoundValue> known_exact_value(const PlanarDomain& domain, int k);

}  // namespace escobar

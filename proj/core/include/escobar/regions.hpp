#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "escobar/geometry.hpp"

namespace escobar {

/// Subdomain cut off by the chord b–a; its exterior boundary is the CCW
/// boundary arc from a to b.
struct Cap {
  BoundaryPoint a;
  BoundaryPoint b;
  bool operator==(const Cap&) const = default;
};

/// Region between two nested chords: `outer` minus `inner`. The exterior
/// boundary is the pair of arcs outer.a→inner.a and inner.b→outer.b.
struct Strip {
  Cap inner;
  Cap outer;
  bool operator==(const Strip&) const = default;
};

using Region = std::variant<Cap, Strip>;

inline constexpr double kInfiniteEta = std::numeric_limits<double>::infinity();

/// Ratio of interior to exterior boundary length; kInfiniteEta when the
/// exterior boundary is empty.
double eta_from_lengths(double interior, double exterior);

struct Interval {
  BoundaryPoint from;
  BoundaryPoint to;
};

std::vector<Interval> exterior_intervals(const Region& region);
std::vector<std::pair<BoundaryPoint, BoundaryPoint>> region_chords(const Region& region);

double exterior_length(const PlanarDomain& domain, const Region& region);
double interior_length(const PlanarDomain& domain, const Region& region);
double eta_partial(const PlanarDomain& domain, const Region& region);
double area(const PlanarDomain& domain, const Region& region);

struct RegionMetrics {
  double interior = 0.0;
  double exterior = 0.0;
  double eta = 0.0;
  double area = 0.0;
};
RegionMetrics measure(const PlanarDomain& domain, const Region& region);

/// Ordered k-tuple of regions in a common domain.
struct TupleCandidate {
  std::vector<Region> regions;
  std::size_t size() const { return regions.size(); }
};

enum class Violation {
  kEmpty,
  kBadAnchor,
  kDegenerateRegion,
  kChordNotInterior,
  kNotNested,
  kArcOverlap,
  kChordCrossing,
  kNesting,
  kSharedEndpoint,
};

const char* to_string(Violation v);

struct ViolationReport {
  Violation predicate = Violation::kEmpty;
  std::size_t first = 0;
  std::size_t second = 0;  // equals `first` for single-region violations
  std::string detail;
};

struct ValidationOptions {
  /// Forbid regions whose closures share a chord endpoint.
  bool strict = false;
};

/// Checks every region and every pair; an empty result means the tuple is valid.
std::vector<ViolationReport> validate_tuple(const PlanarDomain& domain,
                                            const TupleCandidate& tuple,
                                            ValidationOptions options = {});

/// Single-region check (chords interior, nesting of strips, nonempty pieces).
std::optional<ViolationReport> validate_region(const PlanarDomain& domain, const Region& region);

/// Largest eta_partial over the regions; kInfiniteEta if any exterior is empty.
double max_eta(const PlanarDomain& domain, const TupleCandidate& tuple);

}  // namespace escobar

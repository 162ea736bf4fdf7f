#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "escobar/geometry.hpp"
#include "escobar/regions.hpp"

namespace escobar {

/// Leg growth schedules for the corner-concentration tuple. With δ₀ = 1 the
/// legs are t_j = ε·(δ₀ + … + δ_{j−1}).
enum class DeltaSchedule {
  kFine,    // δ_j = ε^{−1/(k−j+2)}; excess decays like ε^{1/(k(k+1))}
  kCoarse,  // δ_j = ε^{−1/(k−j+1)}
};

struct CornerScheduleParams {
  std::size_t corner = 0;  // junction index of the corner
  int k = 1;
  double epsilon = 1e-6;
  DeltaSchedule schedule = DeltaSchedule::kFine;
  int max_shrinks = 60;  // halvings of ε allowed before giving up
};

/// Leg lengths t_1 < … < t_k of the schedule.
std::vector<double> corner_legs(int k, double epsilon, DeltaSchedule schedule);

/// Cap with legs t_1 at the corner followed by strips between consecutive legs.
/// Legs are boundary arclengths measured from the corner. Not validated.
TupleCandidate corner_tuple_from_legs(std::size_t corner, std::span<const double> legs);

/// Validated corner-concentration tuple; ε is halved until every chord is interior.
TupleCandidate corner_tuple(const PlanarDomain& domain, const CornerScheduleParams& params);

/// k equal caps on the unit disk, the first starting at arclength `offset`.
TupleCandidate disk_equal_arc_tuple(int k, double offset = 0.0);

/// Caps whose chords form a regular k-gon through every (n/k)-th edge
/// midpoint of make_regular_polygon(n).
TupleCandidate inscribed_kgon_tuple(int n, int k);

/// Midpoint of the longest edge (first one on ties), as a global arclength.
double default_equal_boundary_offset(const PlanarDomain& domain);

/// k caps on consecutive boundary intervals of length L/k.
TupleCandidate equal_boundary_tuple(const PlanarDomain& domain, int k,
                                    std::optional<double> start_offset = std::nullopt);

/// k stripes of height `stripe_height` across a rectangle, centred along its
/// long axis. Stripes reaching an end of the rectangle become caps.
TupleCandidate stripe_tuple(const PlanarDomain& rectangle, int k, double stripe_height);

}  // namespace escobar

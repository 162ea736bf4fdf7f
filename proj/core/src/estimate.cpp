#include <algorithm>
#include <cmath>
#include <vector>

#include "escobar/search.hpp"

namespace escobar {
namespace {

void consider(BoundReport& best, BoundReport&& candidate, std::uint64_t& evaluations) {
  evaluations += candidate.evaluations;
  if (candidate.value < best.value) best = std::move(candidate);
}

}  // namespace

BoundReport estimate_ik(const PlanarDomain& domain, int k, const SearchConfig& config) {
  if (k < 2) throw Error(ErrorCode::kInvalidParameter, "k must be at least 2");
  BoundReport best;
  std::uint64_t evaluations = 0;

  if (config.caps) {
    const int m = config.grid_points > 0 ? config.grid_points : automatic_grid(domain, k, config);
    if (m >= 2 * k) {
      BoundReport found = enumerate_caps(domain, k, m, config);
      const int grid = found.grid_points;
      if (k <= config.refine_max_k) {
        BoundReport refined = refine_caps(domain, k, found.witness, config);
        if (refined.value < found.value) {
          refined.provenance = found.provenance + "+nelder-mead";
          refined.evaluations += found.evaluations;
          refined.grid_points = grid;
          found = std::move(refined);
        }
      }
      consider(best, std::move(found), evaluations);
    }

    try {
      BoundReport swept = equal_boundary_sweep(domain, k, config);
      if (k <= config.refine_max_k) {
        BoundReport refined = refine_caps(domain, k, swept.witness, config);
        if (refined.value < swept.value) {
          refined.provenance = swept.provenance + "+nelder-mead";
          refined.evaluations += swept.evaluations;
          swept = std::move(refined);
        }
      }
      consider(best, std::move(swept), evaluations);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kConstructionFailure) throw;
    }
  }

  if (config.corner_strips) {
    try {
      consider(best, corner_family_bound(domain, k, config), evaluations);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotApplicable && e.code() != ErrorCode::kConstructionFailure) {
        throw;
      }
    }
  }

  if (best.witness.regions.empty()) {
    throw Error(ErrorCode::kConstructionFailure, "no enabled family produced a valid tuple");
  }
  best.evaluations = evaluations;
  best.kind = BoundKind::kEstimate;
  if (const auto exact = known_exact_value(domain, k)) {
    if (std::abs(best.value - exact->value) <= config.tolerance) {
      best.kind = BoundKind::kExact;
      best.provenance += "; matches " + exact->provenance;
    }
  }
  return best;
}

}  // namespace escobar

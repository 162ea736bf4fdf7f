#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "escobar/exact.hpp"
#include "escobar/geometry.hpp"
#include "escobar/regions.hpp"

namespace escobar {

/// Convergence threshold of the optimizers and tolerance for matching known values.
inline constexpr double kTauOpt = 1e-7;

enum class SearchMethod { kEnumeration, kNelderMead, kCornerFamily, kEqualBoundary };

const char* to_string(SearchMethod method);

struct SearchConfig {
  int grid_points = 0;        // 0 picks the largest admissible grid automatically
  int max_grid_points = 96;   // upper limit for the automatic choice
  bool caps = true;           // cap tuples (enumeration, equal-boundary sweep, refinement)
  bool corner_strips = true;  // corner-concentration families
  int restarts = 6;
  int max_iterations = 4000;  // per Nelder–Mead run
  std::uint64_t seed = 20240607;
  double tolerance = kTauOpt;
  double budget = 1e9;             // refuse enumerations with more placements than this
  double auto_grid_budget = 4e6;   // placement target for the automatic grid
  int equal_boundary_samples = 64;
  int refine_max_k = 12;           // skip simplex refinement above this k
  unsigned threads = 0;            // 0 uses hardware concurrency
};

struct BoundReport {
  double value = std::numeric_limits<double>::infinity();
  BoundKind kind = BoundKind::kEstimate;
  SearchMethod method = SearchMethod::kEnumeration;
  std::string provenance;
  TupleCandidate witness;
  std::uint64_t evaluations = 0;
  int grid_points = 0;  // enumeration only
};

/// Number of cap placements enumerate_caps would visit without value pruning.
double enumeration_placements(const PlanarDomain& domain, int k, int m);

/// Grid size estimate_ik would use, or 0 if none fits the configuration.
int automatic_grid(const PlanarDomain& domain, int k, const SearchConfig& config);

/// Exhaustive search over k caps whose endpoints lie on m equally spaced
/// boundary points. Ties resolve to the lexicographically smallest cut vector.
BoundReport enumerate_caps(const PlanarDomain& domain, int k, int m,
                           const SearchConfig& config = {});

/// Multi-start Nelder–Mead on the tuple's boundary parameters. The result is
/// never worse than `initial`.
BoundReport refine_caps(const PlanarDomain& domain, int k, const TupleCandidate& initial,
                        const SearchConfig& config = {});

/// Best equal-boundary tuple over a sweep of start offsets.
BoundReport equal_boundary_sweep(const PlanarDomain& domain, int k,
                                 const SearchConfig& config = {});

/// Corner-concentration tuples optimized per corner of angle below π.
BoundReport corner_family_bound(const PlanarDomain& domain, int k,
                                const SearchConfig& config = {});

/// Best certified upper bound over all enabled families.
BoundReport estimate_ik(const PlanarDomain& domain, int k, const SearchConfig& config = {});

}  // namespace escobar

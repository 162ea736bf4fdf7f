#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace escobar::detail {

struct SimplexOptions {
  int max_iterations = 4000;
  int restarts = 6;
  double initial_step = 0.05;
  double tolerance = 1e-7;
  double collapse = 1e-14;  // restart once the simplex diameter falls below this
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::uint64_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Multi-start Nelder–Mead. Each restart rebuilds the simplex around the best
/// point with randomly signed, randomly scaled axis steps drawn from `rng`.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opt,
                          std::mt19937_64& rng);

}  // namespace escobar::detail

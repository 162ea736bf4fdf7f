#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace escobar::detail {
namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

double diameter(const std::vector<Vertex>& s) {
  double d = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s[i].x.size(); ++j) {
      d = std::max(d, std::abs(s[i].x[j] - s[0].x[j]));
    }
  }
  return d;
}

}  // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opt,
                          std::mt19937_64& rng) {
  const std::size_t n = x0.size();
  SimplexResult best{x0, f(x0), 1};
  if (n == 0) return best;

  std::uniform_real_distribution<double> scale(0.5, 1.5);
  std::bernoulli_distribution flip(0.5);
  auto eval = [&](std::vector<double> x) {
    ++best.evaluations;
    const double v = f(x);
    return Vertex{std::move(x), std::isnan(v) ? std::numeric_limits<double>::infinity() : v};
  };

  for (int run = 0; run < std::max(1, opt.restarts); ++run) {
    double step = opt.initial_step;
    if (run > 0) step *= std::pow(0.5, run % 4);
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back(Vertex{best.x, best.value});
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> x = best.x;
      double h = run == 0 ? step : step * scale(rng);
      if (run > 0 && flip(rng)) h = -h;
      x[i] += h;
      simplex.push_back(eval(std::move(x)));
    }

    for (int it = 0; it < opt.max_iterations; ++it) {
      std::sort(simplex.begin(), simplex.end(),
                [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
      const double spread = simplex.back().f - simplex.front().f;
      if (diameter(simplex) < opt.collapse ||
          (std::isfinite(spread) && spread <= 1e-3 * opt.tolerance * opt.tolerance)) {
        break;
      }
      std::vector<double> centroid(n, 0.0);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[v].x[j];
      }
      for (double& c : centroid) c /= static_cast<double>(n);
      auto along = [&](double t) {
        std::vector<double> x(n);
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = centroid[j] + t * (simplex[n].x[j] - centroid[j]);
        }
        return x;
      };

      Vertex reflected = eval(along(-1.0));
      if (reflected.f < simplex[0].f) {
        Vertex expanded = eval(along(-2.0));
        simplex[n] = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
        continue;
      }
      if (reflected.f < simplex[n - 1].f) {
        simplex[n] = std::move(reflected);
        continue;
      }
      const bool outside = reflected.f < simplex[n].f;
      Vertex contracted = eval(along(outside ? -0.5 : 0.5));
      if (contracted.f < (outside ? reflected.f : simplex[n].f)) {
        simplex[n] = std::move(contracted);
        continue;
      }
      for (std::size_t v = 1; v <= n; ++v) {
        std::vector<double> x(n);
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = simplex[0].x[j] + 0.5 * (simplex[v].x[j] - simplex[0].x[j]);
        }
        simplex[v] = eval(std::move(x));
      }
    }
    const auto it = std::min_element(simplex.begin(), simplex.end(),
                                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    if (it->f < best.value) {
      best.value = it->f;
      best.x = it->x;
    }
  }
  return best;
}

}  // namespace escobar::detail

#include <algorithm>
#include <cmath>
#include <numbers>

#include "escobar/constructions.hpp"
#include "escobar/search.hpp"

namespace escobar {
namespace {

// Smallest leg relative to the domain size; keeps every coordinate and
// product well inside the normal double range.
constexpr double kLegFloor = 1e-290;

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  TupleCandidate tuple;
  std::string provenance;
};

double evaluate(const PlanarDomain& domain, const TupleCandidate& t, std::uint64_t& evaluations) {
  ++evaluations;
  if (!validate_tuple(domain, t).empty()) return std::numeric_limits<double>::infinity();
  return max_eta(domain, t);
}

// Golden-section minimisation of f on [lo, hi]; returns the best point seen.
template <class F>
double golden_section(F&& f, double lo, double hi, int iterations) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  double best_x = fc <= fd ? c : d;
  double best_f = std::min(fc, fd);
  for (int i = 0; i < iterations; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
      if (fc < best_f) best_f = fc, best_x = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
      if (fd < best_f) best_f = fd, best_x = d;
    }
  }
  const double fh = f(hi);
  return fh <= best_f ? hi : best_x;
}

std::vector<double> geometric_legs(int k, double outer, double floor) {
  std::vector<double> legs(static_cast<std::size_t>(k));
  if (k == 1) {
    legs[0] = outer;
    return legs;
  }
  const double log_ratio = (std::log(outer) - std::log(floor)) / (k - 1);
  for (int j = 0; j < k; ++j) {
    legs[static_cast<std::size_t>(j)] = std::exp(std::log(outer) - log_ratio * (k - 1 - j));
  }
  legs.back() = outer;
  return legs;
}

Candidate best_for_corner(const PlanarDomain& domain, std::size_t corner, int k,
                          std::uint64_t& evaluations) {
  const std::size_t m = domain.edge_count();
  const double reach = 0.999 * std::min(domain.edges()[corner].length(),
                                        domain.edges()[(corner + m - 1) % m].length());
  const double floor = kLegFloor * domain.length_scale();
  Candidate best;

  // Geometric legs: equal ratio between consecutive legs, outer leg tuned.
  auto geometric = [&](double log_outer) {
    const auto legs = geometric_legs(k, std::exp(log_outer), floor);
    return corner_tuple_from_legs(corner, legs);
  };
  double top = std::log(reach);
  int halvings = 0;
  while (!std::isfinite(evaluate(domain, geometric(top), evaluations)) && halvings < 200) {
    top -= std::log(2.0);
    ++halvings;
  }
  if (halvings < 200) {
    const double lo = top - std::log(1e12);
    const double x = golden_section(
        [&](double u) { return evaluate(domain, geometric(u), evaluations); }, lo, top, 60);
    TupleCandidate t = geometric(x);
    const double v = evaluate(domain, t, evaluations);
    if (v < best.value) {
      best = {v, std::move(t),
              "corner-geometric:junction=" + std::to_string(corner)};
    }
  }

  // The δ-schedule family, tuned over log ε.
  auto scheduled = [&](double log_eps) -> std::optional<TupleCandidate> {
    const auto legs = corner_legs(k, std::exp(log_eps), DeltaSchedule::kFine);
    if (legs.back() > reach) return std::nullopt;
    return corner_tuple_from_legs(corner, legs);
  };
  auto scheduled_value = [&](double log_eps) {
    const auto t = scheduled(log_eps);
    return t ? evaluate(domain, *t, evaluations) : std::numeric_limits<double>::infinity();
  };
  const double eps_lo = std::log(std::max(floor, 1e-300));
  const double eps_hi = std::log(std::min(0.5, reach));
  if (eps_hi > eps_lo) {
    const double x = golden_section(scheduled_value, eps_lo, eps_hi, 60);
    if (const auto t = scheduled(x)) {
      const double v = evaluate(domain, *t, evaluations);
      if (v < best.value) {
        best = {v, *t, "corner-schedule:junction=" + std::to_string(corner)};
      }
    }
  }
  return best;
}

}  // namespace

BoundReport corner_family_bound(const PlanarDomain& domain, int k, const SearchConfig&) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be at least 1");
  BoundReport report;
  report.method = SearchMethod::kCornerFamily;
  bool eligible = false;
  for (const Corner& c : domain.corners()) {
    if (!(c.angle < std::numbers::pi)) continue;
    eligible = true;
    Candidate cand = best_for_corner(domain, c.junction, k, report.evaluations);
    if (cand.value < report.value) {
      report.value = cand.value;
      report.witness = std::move(cand.tuple);
      report.provenance = std::move(cand.provenance);
    }
  }
  if (!eligible) {
    throw Error(ErrorCode::kNotApplicable, "no corner with interior angle below pi");
  }
  if (report.witness.regions.empty()) {
    throw Error(ErrorCode::kConstructionFailure, "no valid corner tuple found");
  }
  return report;
}

}  // namespace escobar

#include <algorithm>
#include <cmath>
#include <random>

#include "escobar/constructions.hpp"
#include "escobar/search.hpp"
#include "nelder_mead.hpp"

namespace escobar {
namespace {

// Objective value for tuples that fail validation; kept finite so the
// simplex can still rank infeasible vertices by how many chords fail.
constexpr double kPenalty = 10.0;

bool all_caps(const TupleCandidate& t) {
  return std::all_of(t.regions.begin(), t.regions.end(),
                     [](const Region& r) { return std::holds_alternative<Cap>(r); });
}

// Caps encoded as a start arclength plus 2k weights; |w| normalised to the
// perimeter gives alternating cap and gap lengths, so arcs never overlap.
struct CapEncoding {
  const PlanarDomain& domain;
  std::size_t k;

  std::vector<double> encode(const TupleCandidate& t) const {
    std::vector<double> x;
    x.reserve(2 * k + 1);
    x.push_back(domain.arclength(std::get<Cap>(t.regions[0]).a) / domain.perimeter());
    for (std::size_t i = 0; i < k; ++i) {
      const Cap& c = std::get<Cap>(t.regions[i]);
      const Cap& next = std::get<Cap>(t.regions[(i + 1) % k]);
      x.push_back(domain.forward_span(c.a, c.b) / domain.perimeter());
      x.push_back(domain.forward_span(c.b, next.a) / domain.perimeter());
    }
    return x;
  }

  TupleCandidate decode(std::span<const double> x) const {
    double total = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) total += std::abs(x[i]);
    TupleCandidate t;
    if (!(total > 0.0)) return t;
    const double L = domain.perimeter();
    double s = x[0] * L;
    BoundaryPoint first = domain.anchor(s);
    BoundaryPoint a = first;
    for (std::size_t i = 0; i < k; ++i) {
      s += std::abs(x[1 + 2 * i]) / total * L;
      const BoundaryPoint b = domain.anchor(s);
      t.regions.emplace_back(Cap{a, b});
      s += std::abs(x[2 + 2 * i]) / total * L;
      a = i + 1 == k ? first : domain.anchor(s);
    }
    return t;
  }
};

double cap_objective(const PlanarDomain& domain, const TupleCandidate& t) {
  if (t.regions.empty()) return 2.0 * kPenalty;
  double worst = 0.0;
  int failures = 0;
  for (const Region& r : t.regions) {
    const Cap& c = std::get<Cap>(r);
    bool ok = false;
    try {
      ok = domain.chord_is_interior(c.a, c.b);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      ++failures;
      continue;
    }
    worst = std::max(worst, eta_partial(domain, r));
  }
  return failures > 0 ? kPenalty + failures : worst;
}

// Every boundary point as a free offset from its anchor.
std::vector<BoundaryPoint*> tuple_points(TupleCandidate& t) {
  std::vector<BoundaryPoint*> pts;
  for (Region& r : t.regions) {
    if (Cap* c = std::get_if<Cap>(&r)) {
      pts.push_back(&c->a);
      pts.push_back(&c->b);
    } else {
      Strip& s = std::get<Strip>(r);
      pts.push_back(&s.inner.a);
      pts.push_back(&s.inner.b);
      pts.push_back(&s.outer.a);
      pts.push_back(&s.outer.b);
    }
  }
  return pts;
}

}  // namespace

const char* to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::kEnumeration:
      return "enumeration";
    case SearchMethod::kNelderMead:
      return "nelder-mead";
    case SearchMethod::kCornerFamily:
      return "corner-family";
    case SearchMethod::kEqualBoundary:
      return "equal-boundary";
  }
  return "unknown";
}

BoundReport refine_caps(const PlanarDomain& domain, int k, const TupleCandidate& initial,
                        const SearchConfig& config) {
  if (k < 1 || initial.regions.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kInvalidParameter, "initial tuple must have k regions");
  }
  BoundReport report;
  report.method = SearchMethod::kNelderMead;
  report.provenance = "nelder-mead";
  report.witness = initial;
  report.value = validate_tuple(domain, initial).empty() ? max_eta(domain, initial) : kInfiniteEta;

  std::mt19937_64 rng(config.seed);
  detail::SimplexOptions opt;
  opt.max_iterations = config.max_iterations;
  opt.restarts = std::max(1, config.restarts);
  opt.tolerance = config.tolerance;

  TupleCandidate candidate;
  if (all_caps(initial)) {
    const CapEncoding enc{domain, initial.regions.size()};
    opt.initial_step = 0.25 / static_cast<double>(2 * k);
    const auto result = detail::nelder_mead(
        [&](std::span<const double> x) { return cap_objective(domain, enc.decode(x)); },
        enc.encode(initial), opt, rng);
    report.evaluations = result.evaluations;
    candidate = enc.decode(result.x);
  } else {
    TupleCandidate work = initial;
    std::vector<BoundaryPoint*> pts = tuple_points(work);
    std::vector<double> x0;
    double scale = std::numeric_limits<double>::infinity();
    for (const BoundaryPoint* p : pts) x0.push_back(p->offset);
    for (const Region& r : initial.regions) scale = std::min(scale, exterior_length(domain, r));
    opt.initial_step = 0.1 * scale;
    const auto apply = [&](std::span<const double> x) {
      for (std::size_t i = 0; i < pts.size(); ++i) pts[i]->offset = x[i];
    };
    const auto result = detail::nelder_mead(
        [&](std::span<const double> x) {
          apply(x);
          if (!validate_tuple(domain, work).empty()) return kPenalty;
          return max_eta(domain, work);
        },
        x0, opt, rng);
    report.evaluations = result.evaluations;
    apply(result.x);
    candidate = work;
  }

  if (!candidate.regions.empty() && validate_tuple(domain, candidate).empty()) {
    const double value = max_eta(domain, candidate);
    if (value < report.value) {
      report.value = value;
      report.witness = std::move(candidate);
    }
  }
  return report;
}

BoundReport equal_boundary_sweep(const PlanarDomain& domain, int k, const SearchConfig& config) {
  if (k < 2) throw Error(ErrorCode::kInvalidParameter, "k must be at least 2");
  std::vector<double> offsets;
  const int samples = std::max(1, config.equal_boundary_samples);
  const double period = domain.perimeter() / k;
  for (int i = 0; i < samples; ++i) offsets.push_back(period * i / samples);
  for (std::size_t e = 0; e < domain.edge_count(); ++e) {
    offsets.push_back(domain.junction_arclength(e) + 0.5 * domain.edges()[e].length());
  }
  BoundReport report;
  report.method = SearchMethod::kEqualBoundary;
  for (double offset : offsets) {
    ++report.evaluations;
    TupleCandidate t;
    try {
      t = equal_boundary_tuple(domain, k, offset);
    } catch (const Error&) {
      continue;
    }
    const double v = max_eta(domain, t);
    if (v < report.value) {
      report.value = v;
      report.witness = std::move(t);
      report.provenance = "equal-boundary:offset=" + std::to_string(offset);
    }
  }
  if (report.witness.regions.empty()) {
    throw Error(ErrorCode::kConstructionFailure, "no equal-boundary offset gives a valid tuple");
  }
  return report;
}

}  // namespace escobar

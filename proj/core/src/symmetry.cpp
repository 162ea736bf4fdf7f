#include "escobar/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "escobar/error.hpp"

namespace escobar {
namespace {

double edge_length(const PlanarDomain& polygon) {
  return polygon.perimeter() / polygon.regular_sides();
}

void require_regular(const PlanarDomain& polygon) {
  if (polygon.shape() != DomainShape::kRegularPolygon || polygon.regular_sides() < 3) {
    throw Error(ErrorCode::kNotApplicable, "symmetrization is defined on regular polygons only");
  }
}

void require_sides(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidParameter, "regular polygon needs n >= 3");
}

double eta_of(const PlanarDomain& polygon, double length, SymmetryCenter center) {
  return eta_partial(polygon, Region{symmetric_cap(polygon, length, center)});
}

bool degenerate(const PlanarDomain& polygon, const Cap& cap) {
  return validate_region(polygon, Region{cap}).has_value();
}

std::string describe(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 sample_rng(const AuditConfig& config, int n, std::uint64_t stream,
                           std::size_t index) {
  std::uint64_t s = splitmix(config.seed);
  s = splitmix(s ^ static_cast<std::uint64_t>(n));
  s = splitmix(s ^ stream);
  return std::mt19937_64(splitmix(s ^ index));
}

// Runs check(i) for every sample, worst margin first, ties to the lowest index.
template <class F>
SuiteReport run_suite(std::string name, int n, std::size_t samples, const AuditConfig& config,
                      F check) {
  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 64);
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(samples, 1)));

  struct Partial {
    std::size_t failures = 0;
    double worst = std::numeric_limits<double>::infinity();
    std::size_t worst_index = 0;
    std::string detail;
  };
  std::vector<Partial> partial(threads);
  auto work = [&](unsigned t) {
    Partial& p = partial[t];
    for (std::size_t i = t; i < samples; i += threads) {
      const CheckResult r = check(i);
      if (!r.ok) ++p.failures;
      if (r.margin < p.worst || (r.margin == p.worst && i < p.worst_index)) {
        p.worst = r.margin;
        p.worst_index = i;
        p.detail = r.detail;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  SuiteReport report;
  report.name = std::move(name);
  report.n = n;
  report.samples = samples;
  report.worst_margin = std::numeric_limits<double>::infinity();
  std::size_t worst_index = 0;
  for (const Partial& p : partial) {
    report.failures += p.failures;
    if (p.worst < report.worst_margin ||
        (p.worst == report.worst_margin && p.worst_index < worst_index)) {
      report.worst_margin = p.worst;
      worst_index = p.worst_index;
      report.worst_detail = p.detail;
    }
  }
  return report;
}

Cap random_cap(const PlanarDomain& polygon, double max_length, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> len_dist(polygon.tau() * edge_length(polygon),
                                                  max_length);
  std::uniform_real_distribution<double> pos_dist(0.0, polygon.perimeter());
  const double length = len_dist(rng);
  const double center = pos_dist(rng);
  // Anchor at the junction nearest the centre to keep short chords accurate.
  const int n = polygon.regular_sides();
  const auto j = static_cast<std::size_t>(std::lround(center / edge_length(polygon))) % n;
  const double local = center - polygon.junction_arclength(j) -
                       (j == 0 && center > 0.5 * polygon.perimeter() ? polygon.perimeter() : 0.0);
  return {{j, local - 0.5 * length}, {j, local + 0.5 * length}};
}

}  // namespace

const char* to_string(SymmetryCenter center) {
  return center == SymmetryCenter::kEdgeMidpoint ? "edge-midpoint" : "vertex";
}

Cap symmetric_cap(const PlanarDomain& polygon, double length, SymmetryCenter center) {
  require_regular(polygon);
  if (!(length > 0.0) || !(length < polygon.perimeter())) {
    throw Error(ErrorCode::kInvalidParameter, "exterior length must lie in (0, perimeter)");
  }
  const double mid = center == SymmetryCenter::kEdgeMidpoint ? 0.5 * edge_length(polygon) : 0.0;
  return {{0, mid - 0.5 * length}, {0, mid + 0.5 * length}};
}

double symmetric_eta(int n, double length, SymmetryCenter center) {
  require_sides(n);
  return eta_of(PlanarDomain::make_regular_polygon(n), length, center);
}

SymmetrizedRegion symmetrize(const PlanarDomain& polygon, const Cap& base) {
  require_regular(polygon);
  SymmetrizedRegion out;
  out.base = base;
  out.exterior = polygon.forward_span(base.a, base.b);
  if (!(out.exterior > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "cap has an empty exterior boundary");
  }
  if (out.exterior > 0.5 * polygon.perimeter() * (1.0 + polygon.tau())) {
    throw Error(ErrorCode::kNotApplicable, "exterior boundary longer than half the perimeter");
  }
  out.type_one = symmetric_cap(polygon, out.exterior, SymmetryCenter::kEdgeMidpoint);
  out.type_two = symmetric_cap(polygon, out.exterior, SymmetryCenter::kVertex);
  out.base_eta = eta_partial(polygon, Region{base});
  out.type_one_eta = eta_partial(polygon, Region{out.type_one});
  out.type_two_eta = eta_partial(polygon, Region{out.type_two});
  out.type_one_degenerate = degenerate(polygon, out.type_one);
  out.type_two_degenerate = degenerate(polygon, out.type_two);
  return out;
}

CheckResult symmetrization_inequality_check(const PlanarDomain& polygon, const Cap& base,
                                            double margin) {
  const SymmetrizedRegion s = symmetrize(polygon, base);
  const double best = std::min(s.type_one_eta, s.type_two_eta);
  CheckResult r;
  r.margin = s.base_eta - best;
  r.ok = r.margin >= -margin;
  r.detail = describe({{"length", s.exterior},
                       {"eta", s.base_eta},
                       {"type_one", s.type_one_eta},
                       {"type_two", s.type_two_eta}});
  return r;
}

CheckResult monotonicity_check(int n, double shorter, double longer, double margin) {
  require_sides(n);
  const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
  if (!(shorter > 0.0) || shorter > longer ||
      longer > 0.5 * polygon.perimeter() * (1.0 + polygon.tau())) {
    throw Error(ErrorCode::kInvalidParameter, "need 0 < shorter <= longer <= perimeter/2");
  }
  const double one = eta_of(polygon, shorter, SymmetryCenter::kEdgeMidpoint) -
                     eta_of(polygon, longer, SymmetryCenter::kEdgeMidpoint);
  const double two = eta_of(polygon, shorter, SymmetryCenter::kVertex) -
                     eta_of(polygon, longer, SymmetryCenter::kVertex);
  CheckResult r;
  r.margin = std::min(one, two);
  r.ok = r.margin >= -margin;
  r.detail = describe({{"shorter", shorter}, {"longer", longer}, {"drop_one", one}, {"drop_two", two}});
  return r;
}

double crossover_threshold(int n) {
  require_sides(n);
  const double c = std::cos(std::numbers::pi / n);
  const double s = 2.0 * std::sin(std::numbers::pi / n);
  return 2.0 * s * (1.0 + c) / (1.0 + 2.0 * c);
}

double published_crossover_constant(int n) {
  require_sides(n);
  const double c = std::cos(std::numbers::pi / n);
  const double sn = std::sin(std::numbers::pi / n);
  const double s = 2.0 * sn;
  return 2.0 * s * sn * sn / (1.0 + c - c * c);
}

double bisect_crossover(int n, double tolerance) {
  require_sides(n);
  const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
  const double s = edge_length(polygon);
  auto gap = [&](double len) {
    return eta_of(polygon, len, SymmetryCenter::kEdgeMidpoint) -
           eta_of(polygon, len, SymmetryCenter::kVertex);
  };
  double lo = s;
  double hi = 2.0 * s;
  for (int it = 0; it < 200 && hi - lo > tolerance * s; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

CheckResult crossover_check(int n, double length, double margin) {
  require_sides(n);
  const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
  const double s = edge_length(polygon);
  if (!(length > 0.0) || length > 2.0 * s * (1.0 + polygon.tau())) {
    throw Error(ErrorCode::kNotApplicable, "crossover contract covers lengths in (0, 2s]");
  }
  const double one = eta_of(polygon, length, SymmetryCenter::kEdgeMidpoint);
  const double two = eta_of(polygon, length, SymmetryCenter::kVertex);
  const double threshold = crossover_threshold(n);
  CheckResult r;
  r.margin = length >= threshold ? two - one : one - two;
  r.ok = r.margin >= -margin;
  r.detail = describe({{"length", length}, {"threshold", threshold}, {"type_one", one}, {"type_two", two}});
  return r;
}

double lower_envelope(int n, double reference_length) {
  require_sides(n);
  const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
  const double s = edge_length(polygon);
  const double multiple = reference_length / s;
  const double j = std::round(multiple);
  if (std::abs(multiple - j) > 1e-9 || j < 1.0 || 2.0 * j > n) {
    throw Error(ErrorCode::kNotApplicable,
                "reference length must be a multiple of the edge length in [s, ns/2]");
  }
  // Even multiples end at midpoints when centred on a midpoint, odd ones when centred on a vertex.
  const SymmetryCenter center = static_cast<long long>(j) % 2 == 0 ? SymmetryCenter::kEdgeMidpoint
                                                                   : SymmetryCenter::kVertex;
  return eta_of(polygon, j * s, center);
}

SuiteReport lower_envelope_check(int n, double reference_length, const AuditConfig& config) {
  const double envelope = lower_envelope(n, reference_length);
  const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
  const double s = edge_length(polygon);
  std::ostringstream name;
  name << "lower-envelope L0=" << std::lround(reference_length / s) << "s";
  // The last sample is the witness itself, which must attain the envelope.
  return run_suite(name.str(), n, config.samples + 1, config, [&](std::size_t i) {
    double eta = 0.0;
    double length = reference_length;
    if (i == config.samples) {
      eta = std::min(eta_of(polygon, reference_length, SymmetryCenter::kEdgeMidpoint),
                     eta_of(polygon, reference_length, SymmetryCenter::kVertex));
      CheckResult r;
      r.margin = -std::abs(eta - envelope);
      r.ok = r.margin >= -config.margin;
      r.detail = describe({{"witness_eta", eta}, {"envelope", envelope}});
      return r;
    }
    auto rng = sample_rng(config, n, 4, i);
    const Cap cap = random_cap(polygon, reference_length, rng);
    length = polygon.forward_span(cap.a, cap.b);
    eta = eta_partial(polygon, Region{cap});
    CheckResult r;
    r.margin = eta - envelope;
    r.ok = r.margin >= -config.margin;
    r.detail = describe({{"length", length}, {"eta", eta}, {"envelope", envelope}});
    return r;
  });
}

SuiteReport audit_symmetrization(int n, const AuditConfig& config) {
  require_sides(n);
  const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
  return run_suite("symmetrization", n, config.samples, config, [&](std::size_t i) {
    auto rng = sample_rng(config, n, 1, i);
    const Cap cap = random_cap(polygon, 0.5 * polygon.perimeter(), rng);
    return symmetrization_inequality_check(polygon, cap, config.margin);
  });
}

SuiteReport audit_monotonicity(int n, const AuditConfig& config) {
  require_sides(n);
  const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
  const double half = 0.5 * polygon.perimeter();
  return run_suite("monotonicity", n, config.samples, config, [&](std::size_t i) {
    auto rng = sample_rng(config, n, 2, i);
    std::uniform_real_distribution<double> dist(polygon.tau() * edge_length(polygon), half);
    double a = dist(rng);
    double b = dist(rng);
    if (a > b) std::swap(a, b);
    return monotonicity_check(n, a, b, config.margin);
  });
}

SuiteReport audit_crossover(int n, const AuditConfig& config) {
  require_sides(n);
  const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
  const double s = edge_length(polygon);
  const double top = std::min(2.0 * s, 0.5 * polygon.perimeter());
  const double located = bisect_crossover(n);
  const double threshold = crossover_threshold(n);
  // Sample 0 compares the closed form with the bisection.
  return run_suite("crossover", n, config.samples + 1, config, [&](std::size_t i) {
    if (i == 0) {
      CheckResult r;
      r.margin = 1e-6 * s - std::abs(located - threshold);
      r.ok = r.margin >= 0.0;
      r.detail = describe({{"bisection", located}, {"threshold", threshold}});
      return r;
    }
    auto rng = sample_rng(config, n, 3, i);
    std::uniform_real_distribution<double> dist(polygon.tau() * s, top);
    return crossover_check(n, dist(rng), config.margin);
  });
}

std::vector<SuiteReport> symmetry_audit(int n, const AuditConfig& config) {
  std::vector<SuiteReport> out;
  out.push_back(audit_symmetrization(n, config));
  out.push_back(audit_monotonicity(n, config));
  out.push_back(audit_crossover(n, config));
  const double s = 2.0 * std::sin(std::numbers::pi / n);
  for (int j = 1; 2 * j <= n; ++j) out.push_back(lower_envelope_check(n, j * s, config));
  return out;
}

}  // namespace escobar

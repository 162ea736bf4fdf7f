#include "escobar/regions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace escobar {
namespace {

// Relative slack when comparing boundary spans.
constexpr double kSpanSlack = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double chord_length(const PlanarDomain& d, const Cap& c) { return norm(d.displacement(c.a, c.b)); }

// r²/2·(φ − sin φ), with a series for small φ.
double circular_segment_area(double r, double phi) {
  const double f = phi < 1e-3 ? phi * phi * phi / 6.0 * (1.0 - phi * phi / 20.0)
                              : phi - std::sin(phi);
  return 0.5 * r * r * f;
}

// Signed area enclosed by the boundary run a→b closed by the chord b→a,
// evaluated in a frame at a's anchor junction.
double cap_area(const PlanarDomain& d, const Cap& c) {
  const std::size_t m = d.edge_count();
  const std::size_t anchor = c.a.junction % m;
  const Vec2 origin = d.junction_point(anchor);
  const Vec2 p0 = d.local_position(c.a);
  const Vec2 p1 = d.position_relative_to(anchor, c.b);
  double remaining = d.forward_span(c.a, c.b);

  const EdgeLocation start = d.edge_location(c.a);
  std::size_t e = start.edge;
  double available = start.to_end;
  Vec2 cur = p0;
  double twice = 0.0;
  double segments = 0.0;
  for (std::size_t guard = 0; guard <= m + 1 && remaining > 0.0; ++guard) {
    const BoundaryEdge& edge = d.edges()[e];
    const bool last = remaining <= available;
    const double extent = last ? remaining : available;
    const Vec2 next = last ? p1 : d.junction_point((e + 1) % m) - origin;
    twice += cross(cur, next);
    if (const Arc* arc = edge.as_arc()) {
      segments += std::copysign(circular_segment_area(arc->radius, extent / arc->radius),
                                arc->sweep);
    }
    remaining -= extent;
    cur = next;
    if (last) break;
    e = (e + 1) % m;
    available = d.edges()[e].length();
  }
  twice += cross(p1, p0);
  return 0.5 * twice + segments;
}

double span_between(const PlanarDomain& d, const Interval& iv) { return d.forward_span(iv.from, iv.to); }

// Strictly inside the open interval, with slack relative to the interval length.
bool strictly_inside(const PlanarDomain& d, const Interval& iv, const BoundaryPoint& p,
                     double slack) {
  const double len = span_between(d, iv);
  const double pos = d.forward_span(iv.from, p);
  return pos > slack && pos < len - slack;
}

bool same_point(const PlanarDomain& d, const BoundaryPoint& p, const BoundaryPoint& q) {
  const double s = d.forward_span(p, q);
  const double gap = std::min(s, d.perimeter() - s);
  if (p.junction % d.edge_count() == q.junction % d.edge_count()) {
    return gap <= d.tau() * std::max(std::abs(p.offset), std::abs(q.offset));
  }
  return gap <= d.tolerance();
}

}  // namespace

double eta_from_lengths(double interior, double exterior) {
  if (exterior <= 0.0) return kInfiniteEta;
  return interior / exterior;
}

std::vector<Interval> exterior_intervals(const Region& region) {
  return std::visit(overloaded{[](const Cap& c) { return std::vector<Interval>{{c.a, c.b}}; },
                               [](const Strip& s) {
                                 return std::vector<Interval>{{s.outer.a, s.inner.a},
                                                              {s.inner.b, s.outer.b}};
                               }},
                    region);
}

std::vector<std::pair<BoundaryPoint, BoundaryPoint>> region_chords(const Region& region) {
  using Chords = std::vector<std::pair<BoundaryPoint, BoundaryPoint>>;
  return std::visit(overloaded{[](const Cap& c) { return Chords{{c.a, c.b}}; },
                               [](const Strip& s) {
                                 return Chords{{s.inner.a, s.inner.b}, {s.outer.a, s.outer.b}};
                               }},
                    region);
}

double exterior_length(const PlanarDomain& domain, const Region& region) {
  double total = 0.0;
  for (const Interval& iv : exterior_intervals(region)) total += span_between(domain, iv);
  return total;
}

double interior_length(const PlanarDomain& domain, const Region& region) {
  return std::visit(overloaded{[&](const Cap& c) { return chord_length(domain, c); },
                               [&](const Strip& s) {
                                 return chord_length(domain, s.inner) +
                                        chord_length(domain, s.outer);
                               }},
                    region);
}

double eta_partial(const PlanarDomain& domain, const Region& region) {
  return eta_from_lengths(interior_length(domain, region), exterior_length(domain, region));
}

double area(const PlanarDomain& domain, const Region& region) {
  return std::visit(overloaded{[&](const Cap& c) { return cap_area(domain, c); },
                               [&](const Strip& s) {
                                 return cap_area(domain, s.outer) - cap_area(domain, s.inner);
                               }},
                    region);
}

RegionMetrics measure(const PlanarDomain& domain, const Region& region) {
  RegionMetrics m;
  m.interior = interior_length(domain, region);
  m.exterior = exterior_length(domain, region);
  m.eta = eta_from_lengths(m.interior, m.exterior);
  m.area = area(domain, region);
  return m;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kEmpty:
      return "empty";
    case Violation::kBadAnchor:
      return "bad-anchor";
    case Violation::kDegenerateRegion:
      return "degenerate-region";
    case Violation::kChordNotInterior:
      return "chord-not-interior";
    case Violation::kNotNested:
      return "strip-not-nested";
    case Violation::kArcOverlap:
      return "arc-overlap";
    case Violation::kChordCrossing:
      return "chord-crossing";
    case Violation::kNesting:
      return "nesting";
    case Violation::kSharedEndpoint:
      return "shared-endpoint";
  }
  return "unknown";
}

std::optional<ViolationReport> validate_region(const PlanarDomain& domain, const Region& region) {
  auto fail = [](Violation v, std::string detail) {
    return std::optional<ViolationReport>(ViolationReport{v, 0, 0, std::move(detail)});
  };
  for (const auto& [a, b] : region_chords(region)) {
    for (const BoundaryPoint& p : {a, b}) {
      if (p.junction >= domain.edge_count() || !std::isfinite(p.offset)) {
        return fail(Violation::kBadAnchor, "position is not anchored on this domain");
      }
    }
  }
  for (const auto& [a, b] : region_chords(region)) {
    try {
      if (!domain.chord_is_interior(a, b)) {
        return fail(Violation::kChordNotInterior, "chord leaves the open interior");
      }
    } catch (const Error& e) {
      return fail(Violation::kDegenerateRegion, e.what());
    }
  }
  if (const Strip* s = std::get_if<Strip>(&region)) {
    const double outer = domain.forward_span(s->outer.a, s->outer.b);
    const double x = domain.forward_span(s->outer.a, s->inner.a);
    const double y = domain.forward_span(s->inner.a, s->inner.b);
    const double z = domain.forward_span(s->inner.b, s->outer.b);
    if (!(y > 0.0) || !(x + z > 0.0) || std::abs(x + y + z - outer) > kSpanSlack * outer) {
      return fail(Violation::kNotNested, "inner cap is not strictly inside the outer cap");
    }
  }
  if (!(exterior_length(domain, region) > 0.0)) {
    return fail(Violation::kDegenerateRegion, "empty exterior boundary");
  }
  return std::nullopt;
}

std::vector<ViolationReport> validate_tuple(const PlanarDomain& domain,
                                            const TupleCandidate& tuple,
                                            ValidationOptions options) {
  std::vector<ViolationReport> out;
  if (tuple.regions.empty()) {
    out.push_back({Violation::kEmpty, 0, 0, "tuple has no regions"});
    return out;
  }
  const std::size_t k = tuple.regions.size();
  std::vector<std::vector<Interval>> arcs(k);
  std::vector<std::vector<std::pair<BoundaryPoint, BoundaryPoint>>> chords(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (auto v = validate_region(domain, tuple.regions[i])) {
      v->first = v->second = i;
      out.push_back(*v);
    }
    arcs[i] = exterior_intervals(tuple.regions[i]);
    chords[i] = region_chords(tuple.regions[i]);
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      auto report = [&](Violation v, const char* detail) {
        out.push_back({v, i, j, std::string(detail)});
      };
      bool overlap = false;
      for (const Interval& p : arcs[i]) {
        for (const Interval& q : arcs[j]) {
          const double lp = span_between(domain, p);
          const double lq = span_between(domain, q);
          const double slack = kSpanSlack * std::min(lp, lq);
          if (domain.forward_span(p.from, q.from) < lp - slack ||
              domain.forward_span(q.from, p.from) < lq - slack) {
            if (lp > 0.0 && lq > 0.0) overlap = true;
          }
        }
      }
      if (overlap) report(Violation::kArcOverlap, "exterior arcs overlap");

      bool crossing = false;
      for (const auto& [a0, a1] : chords[i]) {
        for (const auto& [b0, b1] : chords[j]) {
          if (domain.chords_cross(a0, a1, b0, b1)) crossing = true;
        }
      }
      if (crossing) report(Violation::kChordCrossing, "chords cross");

      bool nested = false;
      for (int dir = 0; dir < 2 && !nested; ++dir) {
        const auto& host = dir == 0 ? arcs[i] : arcs[j];
        const auto& guest = dir == 0 ? chords[j] : chords[i];
        for (const Interval& iv : host) {
          const double slack = kSpanSlack * span_between(domain, iv);
          for (const auto& [g0, g1] : guest) {
            if (strictly_inside(domain, iv, g0, slack) || strictly_inside(domain, iv, g1, slack)) {
              nested = true;
            }
          }
        }
      }
      if (nested) report(Violation::kNesting, "chord endpoint inside another region's arc");

      if (options.strict) {
        bool shared = false;
        for (const auto& [a0, a1] : chords[i]) {
          for (const auto& [b0, b1] : chords[j]) {
            for (const BoundaryPoint& p : {a0, a1}) {
              for (const BoundaryPoint& q : {b0, b1}) {
                if (same_point(domain, p, q)) shared = true;
              }
            }
          }
        }
        if (shared) report(Violation::kSharedEndpoint, "closures share a chord endpoint");
      }
    }
  }
  return out;
}

double max_eta(const PlanarDomain& domain, const TupleCandidate& tuple) {
  double best = 0.0;
  for (const Region& r : tuple.regions) best = std::max(best, eta_partial(domain, r));
  return best;
}

}  // namespace escobar

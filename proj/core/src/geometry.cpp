#include "escobar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "intersect.hpp"

namespace escobar {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-12;

// r·(e^{i(φ+δ)} − e^{iφ}) with cos δ − 1 evaluated as −2 sin²(δ/2).
Vec2 arc_offset(double r, double phi, double delta) {
  const double h = std::sin(0.5 * delta);
  const double cm1 = -2.0 * h * h;
  const double s = std::sin(delta);
  const double c0 = std::cos(phi);
  const double s0 = std::sin(phi);
  return {r * (c0 * cm1 - s0 * s), r * (s0 * cm1 + c0 * s)};
}

Vec2 arc_tangent(const Arc& arc, double phi) {
  return arc.sweep > 0.0 ? Vec2{-std::sin(phi), std::cos(phi)}
                         : Vec2{std::sin(phi), -std::cos(phi)};
}

double signed_area_of(std::span<const BoundaryEdge> edges) {
  double twice = 0.0;
  double arcs = 0.0;
  for (const BoundaryEdge& e : edges) {
    twice += cross(e.start(), e.end());
    if (const Arc* a = e.as_arc()) {
      const double phi = std::abs(a->sweep);
      arcs += std::copysign(0.5 * a->radius * a->radius * (phi - std::sin(phi)), a->sweep);
    }
  }
  return 0.5 * twice + arcs;
}

}  // namespace

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = std::nextafter(kTwoPi, 0.0);
  return r;
}

// ---------------------------------------------------------------- edges

BoundaryEdge::BoundaryEdge(std::variant<Segment, Arc> shape) : shape_(shape) {
  if (const Segment* s = as_segment()) {
    length_ = norm(s->to - s->from);
  } else {
    const Arc& a = *as_arc();
    length_ = a.radius * std::abs(a.sweep);
  }
}

BoundaryEdge BoundaryEdge::segment(Vec2 from, Vec2 to) {
  if (!(norm(to - from) > 0.0)) {
    throw Error(ErrorCode::kInvalidGeometry, "segment has zero length");
  }
  return BoundaryEdge(Segment{from, to});
}

BoundaryEdge BoundaryEdge::arc(Vec2 center, double radius, double start_angle, double end_angle,
                               bool ccw) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kInvalidGeometry, "arc radius must be positive");
  }
  double sweep = ccw ? wrap_angle(end_angle - start_angle) : -wrap_angle(start_angle - end_angle);
  if (sweep == 0.0) sweep = ccw ? kTwoPi : -kTwoPi;
  return BoundaryEdge(Arc{center, radius, start_angle, sweep});
}

BoundaryEdge BoundaryEdge::arc_through(Vec2 from, Vec2 to, double sweep) {
  if (sweep == 0.0) return segment(from, to);
  if (std::abs(sweep) >= kTwoPi) {
    throw Error(ErrorCode::kInvalidGeometry, "arc sweep must be below a full turn");
  }
  const double chord = norm(to - from);
  if (!(chord > 0.0)) throw Error(ErrorCode::kInvalidGeometry, "arc endpoints coincide");
  const double half = 0.5 * std::abs(sweep);
  const double radius = chord / (2.0 * std::sin(half));
  const Vec2 dir = (to - from) / chord;
  const Vec2 left{-dir.y, dir.x};
  const Vec2 mid = (from + to) * 0.5;
  const double sgn = sweep > 0.0 ? 1.0 : -1.0;
  const Vec2 center = mid + left * (sgn * radius * std::cos(half));
  const Vec2 rel = from - center;
  return BoundaryEdge(Arc{center, radius, std::atan2(rel.y, rel.x), sweep});
}

Vec2 BoundaryEdge::start() const {
  if (const Segment* s = as_segment()) return s->from;
  const Arc& a = *as_arc();
  return a.center + polar(a.radius, a.start_angle);
}

Vec2 BoundaryEdge::end() const {
  if (const Segment* s = as_segment()) return s->to;
  const Arc& a = *as_arc();
  return a.center + polar(a.radius, a.end_angle());
}

Vec2 BoundaryEdge::point_at(double u) const {
  if (const Segment* s = as_segment()) return s->from + (s->to - s->from) * (u / length_);
  const Arc& a = *as_arc();
  return a.center + polar(a.radius, a.start_angle + std::copysign(u / a.radius, a.sweep));
}

Vec2 BoundaryEdge::advance_from_start(double u) const {
  if (const Segment* s = as_segment()) return (s->to - s->from) * (u / length_);
  const Arc& a = *as_arc();
  return arc_offset(a.radius, a.start_angle, std::copysign(u / a.radius, a.sweep));
}

Vec2 BoundaryEdge::retreat_from_end(double u) const {
  if (const Segment* s = as_segment()) return (s->from - s->to) * (u / length_);
  const Arc& a = *as_arc();
  return arc_offset(a.radius, a.end_angle(), -std::copysign(u / a.radius, a.sweep));
}

Vec2 BoundaryEdge::tangent_at_start() const {
  if (const Segment* s = as_segment()) return unit(s->to - s->from);
  const Arc& a = *as_arc();
  return arc_tangent(a, a.start_angle);
}

Vec2 BoundaryEdge::tangent_at_end() const {
  if (const Segment* s = as_segment()) return unit(s->to - s->from);
  const Arc& a = *as_arc();
  return arc_tangent(a, a.end_angle());
}

double BoundaryEdge::project(Vec2 p) const {
  if (const Segment* s = as_segment()) {
    const Vec2 d = (s->to - s->from) / length_;
    return std::clamp(dot(p - s->from, d), 0.0, length_);
  }
  const Arc& a = *as_arc();
  const Vec2 rel = p - a.center;
  const double phi = std::atan2(rel.y, rel.x);
  const double t = a.sweep > 0.0 ? wrap_angle(phi - a.start_angle) : wrap_angle(a.start_angle - phi);
  if (t <= std::abs(a.sweep)) return t * a.radius;
  return norm(p - start()) <= norm(p - end()) ? 0.0 : length_;
}

BoundaryEdge BoundaryEdge::reversed() const {
  if (const Segment* s = as_segment()) return BoundaryEdge(Segment{s->to, s->from});
  const Arc& a = *as_arc();
  return BoundaryEdge(Arc{a.center, a.radius, a.end_angle(), -a.sweep});
}

BoundaryEdge BoundaryEdge::transformed(double scale, Vec2 shift) const {
  if (const Segment* s = as_segment()) {
    return BoundaryEdge(Segment{s->from * scale + shift, s->to * scale + shift});
  }
  const Arc& a = *as_arc();
  return BoundaryEdge(Arc{a.center * scale + shift, a.radius * scale, a.start_angle, a.sweep});
}

// ---------------------------------------------------------------- domain

PlanarDomain::PlanarDomain(std::vector<BoundaryEdge> edges, GeometryOptions options)
    : edges_(std::move(edges)), options_(options) {
  if (edges_.empty()) throw Error(ErrorCode::kInvalidGeometry, "domain has no edges");
  if (!(options_.tau > 0.0)) throw Error(ErrorCode::kInvalidParameter, "tau must be positive");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!(edges_[i].length() > 0.0) || !std::isfinite(edges_[i].length())) {
      throw Error(ErrorCode::kInvalidGeometry, "edge " + std::to_string(i) + " has no length",
                  i);
    }
  }

  // Bounding box over endpoints and the axis extremes of arcs.
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  auto grow = [&](Vec2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const BoundaryEdge& e : edges_) {
    grow(e.start());
    grow(e.end());
    if (const Arc* a = e.as_arc()) {
      for (int q = 0; q < 4; ++q) {
        const double phi = q * 0.5 * kPi;
        if (detail::angle_on_arc(*a, phi, 0.0)) grow(a->center + polar(a->radius, phi));
      }
    }
  }
  length_scale_ = 0.5 * std::max(xmax - xmin, ymax - ymin);
  if (!(length_scale_ > 0.0)) throw Error(ErrorCode::kInvalidGeometry, "domain is degenerate");
  const double tol = tolerance();

  const std::size_t m = edges_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t next = (i + 1) % m;
    if (norm(edges_[i].end() - edges_[next].start()) > tol) {
      throw Error(ErrorCode::kInvalidGeometry,
                  "edge " + std::to_string(i) + " does not end where edge " +
                      std::to_string(next) + " starts",
                  i);
    }
  }

  if (signed_area_of(edges_) < 0.0) {
    std::vector<BoundaryEdge> rev;
    rev.reserve(m);
    for (auto it = edges_.rbegin(); it != edges_.rend(); ++it) rev.push_back(it->reversed());
    edges_ = std::move(rev);
  }

  // Simplicity: non-adjacent edges must not meet; adjacent ones only at their junction.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const detail::EdgeContact contact = detail::intersect_edges(edges_[i], edges_[j], tol);
      const bool i_then_j = j == i + 1;
      const bool j_then_i = (j + 1) % m == i;
      if (contact.overlap) {
        throw Error(ErrorCode::kInvalidGeometry,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) + " overlap", j);
      }
      for (Vec2 p : contact.points) {
        const bool shared = (i_then_j && norm(p - edges_[j].start()) <= 10.0 * tol) ||
                            (j_then_i && norm(p - edges_[i].start()) <= 10.0 * tol);
        if (!shared) {
          throw Error(ErrorCode::kInvalidGeometry,
                      "boundary self-intersects between edges " + std::to_string(i) + " and " +
                          std::to_string(j),
                      j);
        }
      }
    }
  }
  build();
  detect_shape();
}

void PlanarDomain::detect_shape() {
  const std::size_t m = edges_.size();
  if (m == 1 && edges_[0].as_arc() != nullptr) {
    shape_ = DomainShape::kDisk;
    rotation_order_ = 0;
    return;
  }
  if (m < 3 || corners_.size() != m) return;
  const double len = edges_[0].length();
  const double angle = junction_angles_[0];
  for (std::size_t i = 0; i < m; ++i) {
    if (!edges_[i].is_segment() || std::abs(edges_[i].length() - len) > options_.tau * len ||
        std::abs(junction_angles_[i] - angle) > options_.tau) {
      return;
    }
  }
  shape_ = DomainShape::kRegularPolygon;
  regular_sides_ = static_cast<int>(m);
  rotation_order_ = static_cast<int>(m);
}

void PlanarDomain::build() {
  const std::size_t m = edges_.size();
  cumulative_.assign(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) cumulative_[i + 1] = cumulative_[i] + edges_[i].length();
  perimeter_ = cumulative_[m];

  junction_angles_.assign(m, kPi);
  corners_.clear();
  for (std::size_t j = 0; j < m; ++j) {
    const Vec2 t_in = edges_[(j + m - 1) % m].tangent_at_end();
    const Vec2 t_out = edges_[j].tangent_at_start();
    const double turn = std::atan2(cross(t_in, t_out), dot(t_in, t_out));
    if (std::abs(turn) >= kPi - kAngleTol) {
      throw Error(ErrorCode::kInvalidGeometry, "cusp at junction " + std::to_string(j), j);
    }
    const double angle = kPi - turn;
    junction_angles_[j] = angle;
    if (std::abs(turn) > options_.tau) corners_.push_back({j, angle});
  }
  area_ = signed_area_of(edges_);
}

PlanarDomain PlanarDomain::make_regular_polygon(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidParameter, "regular polygon needs n >= 3");
  std::vector<Vec2> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = polar(1.0, kTwoPi * i / n);
  PlanarDomain d = make_polygon(pts);
  d.shape_ = DomainShape::kRegularPolygon;
  d.regular_sides_ = n;
  d.rotation_order_ = n;
  return d;
}

PlanarDomain PlanarDomain::make_disk(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kInvalidParameter, "disk radius must be positive");
  }
  PlanarDomain d({BoundaryEdge::arc({0.0, 0.0}, radius, 0.0, kTwoPi, true)});
  d.shape_ = DomainShape::kDisk;
  d.rotation_order_ = 0;
  return d;
}

PlanarDomain PlanarDomain::make_polygon(std::span<const Vec2> points, GeometryOptions options) {
  std::vector<Vec2> pts(points.begin(), points.end());
  if (pts.size() >= 2 && pts.front() == pts.back()) pts.pop_back();
  if (pts.size() < 3) throw Error(ErrorCode::kInvalidGeometry, "polygon needs at least 3 points");

  double scale = 0.0;
  for (Vec2 p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  const double tol = options.tau * std::max(scale, 1e-300);

  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec2 prev = pts[(i + pts.size() - 1) % pts.size()];
      const Vec2 cur = pts[i];
      const Vec2 next = pts[(i + 1) % pts.size()];
      if (norm(cur - prev) <= tol) {
        throw Error(ErrorCode::kInvalidGeometry, "repeated polygon vertex", i);
      }
      const Vec2 u = unit(cur - prev);
      const Vec2 v = unit(next - cur);
      if (std::abs(cross(u, v)) > options.tau) continue;
      if (dot(u, v) < 0.0) {
        throw Error(ErrorCode::kInvalidGeometry, "polygon folds back on itself at vertex " +
                                                     std::to_string(i), i);
      }
      if (!options.collapse_collinear) {
        throw Error(ErrorCode::kInvalidGeometry,
                    "collinear vertex " + std::to_string(i) + " (collapse disabled)", i);
      }
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  if (pts.size() < 3) throw Error(ErrorCode::kInvalidGeometry, "polygon is degenerate");

  std::vector<BoundaryEdge> edges;
  edges.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    edges.push_back(BoundaryEdge::segment(pts[i], pts[(i + 1) % pts.size()]));
  }
  return PlanarDomain(std::move(edges), options);
}

PlanarDomain PlanarDomain::make_curvilinear_polygon(std::span<const Vec2> points,
                                                    std::span<const double> sweeps,
                                                    GeometryOptions options) {
  if (points.size() < 2 || sweeps.size() != points.size()) {
    throw Error(ErrorCode::kInvalidParameter, "need one sweep per edge and at least 2 points");
  }
  std::vector<BoundaryEdge> edges;
  edges.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    edges.push_back(
        BoundaryEdge::arc_through(points[i], points[(i + 1) % points.size()], sweeps[i]));
  }
  return PlanarDomain(std::move(edges), options);
}

std::vector<double> PlanarDomain::interior_angles() const {
  std::vector<double> out;
  out.reserve(corners_.size());
  for (const Corner& c : corners_) out.push_back(c.angle);
  return out;
}

std::optional<Corner> PlanarDomain::sharpest_corner() const {
  std::optional<Corner> best;
  for (const Corner& c : corners_) {
    if (!best || c.angle < best->angle) best = c;
  }
  return best;
}

double PlanarDomain::wrap(double s) const {
  double r = std::fmod(s, perimeter_);
  if (r < 0.0) r += perimeter_;
  // Points just before the origin must stay just before it.
  if (r >= perimeter_) r = std::nextafter(perimeter_, 0.0);
  return r;
}

double PlanarDomain::arclength(const BoundaryPoint& p) const {
  return wrap(cumulative_[p.junction % edges_.size()] + p.offset);
}

BoundaryPoint PlanarDomain::anchor(double s) const {
  const double w = wrap(s);
  const std::size_t e = edge_at(w);
  return {e, w - cumulative_[e]};
}

std::size_t PlanarDomain::edge_at(double s) const {
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end() - 1, s);
  const auto idx = static_cast<std::size_t>(std::distance(cumulative_.begin(), it));
  return idx == 0 ? 0 : std::min(idx - 1, edges_.size() - 1);
}

Vec2 PlanarDomain::point_at(double s) const {
  const double w = wrap(s);
  const std::size_t e = edge_at(w);
  return edges_[e].point_at(w - cumulative_[e]);
}

Vec2 PlanarDomain::point_at(const BoundaryPoint& p) const {
  return junction_point(p.junction % edges_.size()) + local_position(p);
}

Vec2 PlanarDomain::local_position(const BoundaryPoint& p) const {
  const std::size_t m = edges_.size();
  const std::size_t j = p.junction % m;
  const double u = p.offset;
  if (u >= 0.0 && u <= edges_[j].length()) return edges_[j].advance_from_start(u);
  if (u < 0.0) {
    const std::size_t prev = (j + m - 1) % m;
    if (-u <= edges_[prev].length()) return edges_[prev].retreat_from_end(-u);
  }
  return point_at(arclength(p)) - junction_point(j);
}

Vec2 PlanarDomain::position_relative_to(std::size_t junction, const BoundaryPoint& p) const {
  const std::size_t m = edges_.size();
  junction %= m;
  const std::size_t j = p.junction % m;
  if (j == junction) return local_position(p);
  return (junction_point(j) - junction_point(junction)) + local_position(p);
}

Vec2 PlanarDomain::displacement(const BoundaryPoint& from, const BoundaryPoint& to) const {
  const EdgeLocation lf = edge_location(from);
  const EdgeLocation lt = edge_location(to);
  if (lf.edge == lt.edge) {
    if (const Segment* seg = edges_[lf.edge].as_segment()) {
      // Along one segment the offset difference is exact.
      const std::size_t m = edges_.size();
      const double delta = from.junction % m == to.junction % m ? to.offset - from.offset
                                                                 : lt.from_start - lf.from_start;
      return unit(seg->to - seg->from) * delta;
    }
  }
  return position_relative_to(from.junction, to) - local_position(from);
}

double PlanarDomain::forward_span(const BoundaryPoint& a, const BoundaryPoint& b) const {
  const std::size_t m = edges_.size();
  const double d =
      (cumulative_[b.junction % m] - cumulative_[a.junction % m]) + (b.offset - a.offset);
  return wrap(d);
}

BoundaryPoint PlanarDomain::locate(Vec2 q) const {
  BoundaryPoint best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const double u = edges_[i].project(q);
    const double dist = norm(edges_[i].point_at(u) - q);
    if (dist < best_dist) {
      best_dist = dist;
      best = {i, u};
    }
  }
  return best;
}

EdgeLocation PlanarDomain::edge_location(const BoundaryPoint& p) const {
  const std::size_t m = edges_.size();
  const std::size_t j = p.junction % m;
  const double u = p.offset;
  if (u >= 0.0 && u <= edges_[j].length()) return {j, u, edges_[j].length() - u};
  const std::size_t prev = (j + m - 1) % m;
  if (u < 0.0 && -u <= edges_[prev].length()) return {prev, edges_[prev].length() + u, -u};
  const double s = arclength(p);
  const std::size_t e = edge_at(s);
  const double from_start = std::clamp(s - cumulative_[e], 0.0, edges_[e].length());
  return {e, from_start, edges_[e].length() - from_start};
}

bool PlanarDomain::contains(Vec2 q) const {
  std::vector<detail::LocalEdge> local;
  local.reserve(edges_.size());
  const std::size_t m = edges_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Arc* a = edges_[i].as_arc();
    local.push_back({&edges_[i], junction_point(i), junction_point((i + 1) % m),
                     a != nullptr ? a->center : Vec2{}});
  }
  const auto w = detail::winding_number(q, local, tolerance());
  return w.has_value() && *w != 0;
}

bool PlanarDomain::degenerate_pair(const BoundaryPoint& a, const BoundaryPoint& b) const {
  const double d = forward_span(a, b);
  const double gap = std::min(d, perimeter_ - d);
  const std::size_t m = edges_.size();
  if (a.junction % m == b.junction % m) {
    return gap <= options_.tau * std::max(std::abs(a.offset), std::abs(b.offset));
  }
  return gap <= tolerance();
}

namespace {

enum class Heading { kInside, kOutside, kUnknown };

}  // namespace

bool PlanarDomain::chord_is_interior(const BoundaryPoint& a, const BoundaryPoint& b) const {
  if (degenerate_pair(a, b)) {
    throw Error(ErrorCode::kInvalidParameter, "degenerate chord: endpoints coincide");
  }
  const std::size_t m = edges_.size();
  const std::size_t anchor = a.junction % m;
  const Vec2 origin = junction_point(anchor);
  const Vec2 p0 = local_position(a);
  const Vec2 p1 = position_relative_to(anchor, b);
  const double len = norm(p1 - p0);
  if (!(len > 0.0)) throw Error(ErrorCode::kInvalidParameter, "degenerate chord: zero length");

  std::vector<detail::LocalEdge> local;
  local.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Arc* arc = edges_[i].as_arc();
    local.push_back({&edges_[i], junction_point(i) - origin, junction_point((i + 1) % m) - origin,
                     arc != nullptr ? arc->center - origin : Vec2{}});
  }
  const EdgeLocation la = edge_location(a);
  const EdgeLocation lb = edge_location(b);
  auto on_edge = [m](const EdgeLocation& loc, std::size_t i) {
    return loc.edge == i || (loc.from_start == 0.0 && (loc.edge + m - 1) % m == i) ||
           (loc.to_end == 0.0 && (loc.edge + 1) % m == i);
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (detail::open_segment_hits_edge(p0, p1, local[i], options_.tau, on_edge(la, i),
                                       on_edge(lb, i))) {
      return false;
    }
  }

  auto heading = [&](const EdgeLocation& ep, Vec2 d) -> Heading {
    const double near = options_.tau * len;
    std::optional<std::size_t> junction;
    if (ep.from_start <= near) junction = ep.edge;
    else if (ep.to_end <= near) junction = (ep.edge + 1) % m;
    if (junction) {
      const Vec2 t_out = edges_[*junction].tangent_at_start();
      double alpha = std::atan2(cross(t_out, d), dot(t_out, d));
      if (alpha < 0.0) alpha += kTwoPi;
      const double theta = junction_angles_[*junction];
      if (alpha <= kAngleTol || std::abs(alpha - theta) <= kAngleTol) return Heading::kUnknown;
      return alpha < theta ? Heading::kInside : Heading::kOutside;
    }
    const BoundaryEdge& e = edges_[ep.edge];
    Vec2 t;
    if (const Arc* arc = e.as_arc()) {
      t = arc_tangent(*arc, arc->start_angle + std::copysign(ep.from_start / arc->radius, arc->sweep));
    } else {
      t = e.tangent_at_start();
    }
    const double c = cross(t, unit(d));
    if (c > kAngleTol) return Heading::kInside;
    if (c < -kAngleTol) return Heading::kOutside;
    return Heading::kUnknown;
  };

  const Heading ha = heading(la, p1 - p0);
  if (ha != Heading::kUnknown) return ha == Heading::kInside;
  const Heading hb = heading(lb, p0 - p1);
  if (hb != Heading::kUnknown) return hb == Heading::kInside;
  const auto w = detail::winding_number((p0 + p1) * 0.5, local, options_.tau * len);
  return w.has_value() && *w != 0;
}

bool PlanarDomain::chords_cross(const BoundaryPoint& a0, const BoundaryPoint& a1,
                                const BoundaryPoint& b0, const BoundaryPoint& b1) const {
  const std::size_t anchor = a0.junction % edges_.size();
  return detail::segments_cross(local_position(a0), position_relative_to(anchor, a1),
                                position_relative_to(anchor, b0),
                                position_relative_to(anchor, b1), options_.tau);
}

PlanarDomain PlanarDomain::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorCode::kInvalidParameter, "scale factor must be positive");
  PlanarDomain d;
  d.options_ = options_;
  d.edges_.reserve(edges_.size());
  for (const BoundaryEdge& e : edges_) d.edges_.push_back(e.transformed(factor, {}));
  d.length_scale_ = length_scale_ * factor;
  d.shape_ = shape_;
  d.regular_sides_ = regular_sides_;
  d.rotation_order_ = rotation_order_;
  d.build();
  return d;
}

}  // namespace escobar

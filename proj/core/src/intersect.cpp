#include "intersect.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace escobar::detail {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kParallel = 1e-12;

double angle_between(Vec2 u, Vec2 v) {
  u = unit(u);
  v = unit(v);
  return std::atan2(cross(u, v), dot(u, v));
}

// Roots of |p0 + a·d − c|² = r², |d| = 1, in a cancellation-free form.
int line_circle_roots(Vec2 p0, Vec2 d, Vec2 c, double r, double roots[2]) {
  const Vec2 w = p0 - c;
  const double b = dot(w, d);
  const double wn = norm(w);
  const double q = (wn - r) * (wn + r);
  const double disc = b * b - q;
  if (disc < 0.0) return 0;
  const double sq = std::sqrt(disc);
  const double t1 = -(b + std::copysign(sq, b));
  if (t1 == 0.0) {
    roots[0] = 0.0;
    roots[1] = -2.0 * b;
    return 2;
  }
  roots[0] = t1;
  roots[1] = q / t1;
  return 2;
}

// Is q strictly inside the circle through a (a on the circle)? Evaluated
// relative to a so the answer stays reliable for q arbitrarily close to a.
bool inside_circle_near(Vec2 q, Vec2 a, Vec2 c) {
  const Vec2 delta = q - a;
  const double len = norm(delta);
  if (len == 0.0) return false;
  return len + 2.0 * dot(delta / len, a - c) < 0.0;
}

double distance_to_segment(Vec2 q, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len = norm(ab);
  if (len == 0.0) return norm(q - a);
  const Vec2 e = ab / len;
  const double t = std::clamp(dot(q - a, e), 0.0, len);
  return norm(q - (a + e * t));
}

}  // namespace

bool angle_on_arc(const Arc& arc, double phi, double angular_tol) {
  if (arc.sweep > 0.0) {
    const double t = wrap_angle(phi - arc.start_angle);
    return t <= arc.sweep + angular_tol || t >= kTwoPi - angular_tol;
  }
  const double t = wrap_angle(arc.start_angle - phi);
  return t <= -arc.sweep + angular_tol || t >= kTwoPi - angular_tol;
}

bool open_segment_hits_edge(Vec2 p0, Vec2 p1, const LocalEdge& edge, double rel_tol,
                            bool p0_on, bool p1_on) {
  const double len = norm(p1 - p0);
  const Vec2 d = (p1 - p0) / len;
  const double tol = rel_tol * len;

  if (edge.edge->is_segment()) {
    const double elen = norm(edge.end - edge.start);
    const Vec2 e = (edge.end - edge.start) / elen;
    const double den = cross(d, e);
    if (std::abs(den) > kParallel) {
      // Two lines meet once; an endpoint already on the edge is that meeting.
      if (p0_on || p1_on) return false;
      const bool from_end = norm(edge.end - p0) < norm(edge.start - p0);
      const Vec2 ref = from_end ? edge.end : edge.start;
      const Vec2 w = ref - p0;
      const double t = cross(w, e) / den;
      const double u = cross(w, d) / den + (from_end ? elen : 0.0);
      return t > tol && t < len - tol && u > -tol && u < elen + tol;
    }
    const Vec2 a = edge.start;
    if (!p0_on && !p1_on && std::abs(cross(p0 - a, e)) > tol) return false;
    const double q0 = dot(p0 - a, e);
    const double q1 = dot(p1 - a, e);
    const double overlap = std::min(std::max(q0, q1), elen) - std::max(std::min(q0, q1), 0.0);
    return overlap > tol;
  }

  const Arc& arc = *edge.edge->as_arc();
  if (p0_on && p1_on) return false;  // a chord meets its circle only at its ends
  double roots[2];
  int n = 0;
  if (p0_on) {
    roots[n++] = -2.0 * dot(p0 - edge.center, d);
  } else if (p1_on) {
    roots[n++] = len - 2.0 * dot(p1 - edge.center, -d);
  } else {
    n = line_circle_roots(p0, d, edge.center, arc.radius, roots);
  }
  for (int i = 0; i < n; ++i) {
    const double t = roots[i];
    if (!(t > tol && t < len - tol)) continue;
    const Vec2 q = p0 + d * t - edge.center;
    if (angle_on_arc(arc, std::atan2(q.y, q.x), tol / arc.radius)) return true;
  }
  return false;
}

bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double rel_tol) {
  const double la = norm(a1 - a0);
  const double lb = norm(b1 - b0);
  if (la == 0.0 || lb == 0.0) return false;
  const Vec2 d = (a1 - a0) / la;
  const Vec2 e = (b1 - b0) / lb;
  const double den = cross(d, e);
  if (std::abs(den) <= kParallel) return false;
  const Vec2 w = b0 - a0;
  const double t = cross(w, e) / den;
  const double u = cross(w, d) / den;
  return t > rel_tol * la && t < la * (1.0 - rel_tol) && u > rel_tol * lb &&
         u < lb * (1.0 - rel_tol);
}

std::optional<int> winding_number(Vec2 q, std::span<const LocalEdge> edges, double tol) {
  double total = 0.0;
  for (const LocalEdge& le : edges) {
    if (le.edge->is_segment()) {
      if (distance_to_segment(q, le.start, le.end) <= tol) return std::nullopt;
      total += angle_between(le.start - q, le.end - q);
      continue;
    }
    const Arc& arc = *le.edge->as_arc();
    const Vec2 cq = q - le.center;
    if (std::abs(norm(cq) - arc.radius) <= tol &&
        angle_on_arc(arc, std::atan2(cq.y, cq.x), tol / arc.radius)) {
      return std::nullopt;
    }
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(arc.sweep) /
                                                              (0.5 * std::numbers::pi))));
    const double step = arc.sweep / pieces;
    for (int i = 0; i < pieces; ++i) {
      const Vec2 a = i == 0 ? le.start
                            : le.center + polar(arc.radius, arc.start_angle + step * i);
      const Vec2 b = i + 1 == pieces
                         ? le.end
                         : le.center + polar(arc.radius, arc.start_angle + step * (i + 1));
      total += angle_between(a - q, b - q);
      const double side = cross(unit(b - a), unit(q - a));
      const bool far_side = arc.sweep > 0.0 ? side < 0.0 : side > 0.0;
      if (!far_side) continue;
      const Vec2 nearest = norm(q - a) <= norm(q - b) ? a : b;
      if (inside_circle_near(q, nearest, le.center)) {
        total += arc.sweep > 0.0 ? kTwoPi : -kTwoPi;
      }
    }
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

EdgeContact intersect_edges(const BoundaryEdge& a, const BoundaryEdge& b, double tol) {
  EdgeContact out;
  const Segment* sa = a.as_segment();
  const Segment* sb = b.as_segment();
  const Arc* aa = a.as_arc();
  const Arc* ab = b.as_arc();

  if (sa != nullptr && sb != nullptr) {
    const double la = a.length();
    const double lb = b.length();
    const Vec2 d = (sa->to - sa->from) / la;
    const Vec2 e = (sb->to - sb->from) / lb;
    const double den = cross(d, e);
    if (std::abs(den) > kParallel) {
      const Vec2 w = sb->from - sa->from;
      const double t = cross(w, e) / den;
      const double u = cross(w, d) / den;
      if (t >= -tol && t <= la + tol && u >= -tol && u <= lb + tol) {
        out.points.push_back(sa->from + d * t);
      }
      return out;
    }
    if (std::abs(cross(sb->from - sa->from, d)) > tol) return out;
    const double q0 = dot(sb->from - sa->from, d);
    const double q1 = dot(sb->to - sa->from, d);
    const double lo = std::max(std::min(q0, q1), 0.0);
    const double hi = std::min(std::max(q0, q1), la);
    if (hi - lo > tol) {
      out.overlap = true;
    } else if (hi - lo >= -tol) {
      out.points.push_back(sa->from + d * (0.5 * (lo + hi)));
    }
    return out;
  }

  if ((sa != nullptr) != (sb != nullptr)) {
    const Segment& s = sa != nullptr ? *sa : *sb;
    const Arc& arc = aa != nullptr ? *aa : *ab;
    const double len = norm(s.to - s.from);
    const Vec2 d = (s.to - s.from) / len;
    double roots[2];
    const int n = line_circle_roots(s.from, d, arc.center, arc.radius, roots);
    for (int i = 0; i < n; ++i) {
      if (roots[i] < -tol || roots[i] > len + tol) continue;
      const Vec2 q = s.from + d * roots[i];
      const Vec2 cq = q - arc.center;
      if (angle_on_arc(arc, std::atan2(cq.y, cq.x), tol / arc.radius)) out.points.push_back(q);
    }
    return out;
  }

  const Vec2 c1 = aa->center;
  const Vec2 c2 = ab->center;
  const double r1 = aa->radius;
  const double r2 = ab->radius;
  const double dist = norm(c2 - c1);
  if (dist <= tol && std::abs(r1 - r2) <= tol) {
    const double atol = -tol / r1;
    auto strictly_inside = [&](const Arc& host, const Arc& guest) {
      const double mid = guest.start_angle + 0.5 * guest.sweep;
      return angle_on_arc(host, mid, atol) || angle_on_arc(host, guest.start_angle, atol) ||
             angle_on_arc(host, guest.end_angle(), atol);
    };
    if (strictly_inside(*aa, *ab) || strictly_inside(*ab, *aa)) {
      out.overlap = true;
    } else {
      for (double phi : {ab->start_angle, ab->end_angle()}) {
        if (angle_on_arc(*aa, phi, tol / r1)) out.points.push_back(c1 + polar(r1, phi));
      }
    }
    return out;
  }
  if (dist > r1 + r2 + tol || dist < std::abs(r1 - r2) - tol || dist == 0.0) return out;
  const double along = (r1 * r1 - r2 * r2 + dist * dist) / (2.0 * dist);
  const double h = std::sqrt(std::max(0.0, r1 * r1 - along * along));
  const Vec2 e = (c2 - c1) / dist;
  const Vec2 base = c1 + e * along;
  const Vec2 perp{-e.y, e.x};
  for (double sgn : {1.0, -1.0}) {
    const Vec2 q = base + perp * (sgn * h);
    const Vec2 q1 = q - c1;
    const Vec2 q2 = q - c2;
    if (angle_on_arc(*aa, std::atan2(q1.y, q1.x), tol / r1) &&
        angle_on_arc(*ab, std::atan2(q2.y, q2.x), tol / r2)) {
      out.points.push_back(q);
    }
    if (h == 0.0) break;
  }
  return out;
}

}  // namespace escobar::detail

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "escobar/error.hpp"

namespace escobar {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline Vec2 unit(Vec2 v) { return v / norm(v); }
inline Vec2 polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }

/// Wraps an angle into [0, 2π).
double wrap_angle(double a);

struct Segment {
  Vec2 from;
  Vec2 to;
};

/// Circular arc starting at `start_angle` and turning by `sweep` radians
/// (positive sweep runs counter-clockwise around `center`).
struct Arc {
  Vec2 center;
  double radius = 1.0;
  double start_angle = 0.0;
  double sweep = 2.0 * std::numbers::pi;

  double end_angle() const { return start_angle + sweep; }
  bool ccw() const { return sweep > 0.0; }
};

/// One piece of a domain boundary: a line segment or a circular arc.
class BoundaryEdge {
 public:
  static BoundaryEdge segment(Vec2 from, Vec2 to);
  static BoundaryEdge arc(Vec2 center, double radius, double start_angle, double end_angle,
                          bool ccw);
  /// Arc from `from` to `to` turning by `sweep` (|sweep| < 2π); sweep 0 gives a segment.
  static BoundaryEdge arc_through(Vec2 from, Vec2 to, double sweep);

  const Segment* as_segment() const { return std::get_if<Segment>(&shape_); }
  const Arc* as_arc() const { return std::get_if<Arc>(&shape_); }
  bool is_segment() const { return as_segment() != nullptr; }

  double length() const { return length_; }
  Vec2 start() const;
  Vec2 end() const;
  Vec2 point_at(double u) const;

  // Offsets measured from an endpoint, computed without cancellation so that
  // u may be many orders of magnitude below the edge length.
  Vec2 advance_from_start(double u) const;
  Vec2 retreat_from_end(double u) const;

  Vec2 tangent_at_start() const;
  Vec2 tangent_at_end() const;

  /// Arclength parameter of the point on this edge nearest to p.
  double project(Vec2 p) const;

  BoundaryEdge reversed() const;
  BoundaryEdge transformed(double scale, Vec2 shift) const;

 private:
  explicit BoundaryEdge(std::variant<Segment, Arc> shape);
  std::variant<Segment, Arc> shape_;
  double length_ = 0.0;
};

/// A position on the boundary: the point reached by walking `offset`
/// (signed arclength, CCW positive) from the start of edge `junction`.
///
/// Anchoring at a junction keeps points near a corner exact relative to that
/// corner even when offsets are far below double resolution of the global
/// arclength. `at(s)` gives the usual global parameterisation.
struct BoundaryPoint {
  std::size_t junction = 0;
  double offset = 0.0;

  static constexpr BoundaryPoint at(double s) { return {0, s}; }
  bool operator==(const BoundaryPoint&) const = default;
};

struct Corner {
  std::size_t junction = 0;
  double angle = 0.0;  // interior angle in (0, 2π)
};

/// Where a BoundaryPoint falls on an edge, measured from both edge ends.
struct EdgeLocation {
  std::size_t edge = 0;
  double from_start = 0.0;
  double to_end = 0.0;
};

struct GeometryOptions {
  double tau = 1e-9;
  bool collapse_collinear = true;
};

enum class DomainShape { kGeneric, kDisk, kRegularPolygon };

class PlanarDomain {
 public:
  /// Validates closure and simplicity; CW input is reversed to CCW.
  explicit PlanarDomain(std::vector<BoundaryEdge> edges, GeometryOptions options = {});

  static PlanarDomain make_regular_polygon(int n);
  static PlanarDomain make_disk(double radius = 1.0);
  static PlanarDomain make_polygon(std::span<const Vec2> points, GeometryOptions options = {});
  /// Polygon whose i-th edge (points[i] → points[i+1]) bulges by sweeps[i]
  /// radians: positive bulges outward, negative inward, zero is straight.
  static PlanarDomain make_curvilinear_polygon(std::span<const Vec2> points,
                                               std::span<const double> sweeps,
                                               GeometryOptions options = {});

  std::span<const BoundaryEdge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  double perimeter() const { return perimeter_; }
  double tau() const { return options_.tau; }
  const GeometryOptions& options() const { return options_; }
  /// Characteristic length (half the larger bounding-box side); tolerances scale with it.
  double length_scale() const { return length_scale_; }
  double tolerance() const { return options_.tau * length_scale_; }

  double junction_arclength(std::size_t j) const { return cumulative_[j]; }
  Vec2 junction_point(std::size_t j) const { return edges_[j].start(); }
  /// Angle at every junction (π for smooth junctions).
  std::span<const double> junction_angles() const { return junction_angles_; }
  /// Junctions whose interior angle differs from π.
  std::span<const Corner> corners() const { return corners_; }
  std::vector<double> interior_angles() const;
  std::optional<Corner> sharpest_corner() const;

  DomainShape shape() const { return shape_; }
  int regular_sides() const { return regular_sides_; }
  /// Order of a rotation group mapping the arclength grid onto itself;
  /// 0 means continuous (the disk), 1 means none known.
  int rotation_order() const { return rotation_order_; }

  double wrap(double s) const;
  double arclength(const BoundaryPoint& p) const;
  /// Global arclength s expressed relative to the start of the edge containing it.
  BoundaryPoint anchor(double s) const;
  Vec2 point_at(double s) const;
  Vec2 point_at(const BoundaryPoint& p) const;
  /// p minus the junction point it is anchored at.
  Vec2 local_position(const BoundaryPoint& p) const;
  /// p minus junction_point(junction).
  Vec2 position_relative_to(std::size_t junction, const BoundaryPoint& p) const;
  Vec2 displacement(const BoundaryPoint& from, const BoundaryPoint& to) const;
  /// CCW boundary length from a to b, in [0, L).
  double forward_span(const BoundaryPoint& a, const BoundaryPoint& b) const;
  /// Nearest boundary position to q, anchored at the start of its edge.
  BoundaryPoint locate(Vec2 q) const;
  /// Edge containing p; distances to the nearer edge end stay exact for anchored points.
  EdgeLocation edge_location(const BoundaryPoint& p) const;

  /// True iff q lies in the open interior.
  bool contains(Vec2 q) const;
  /// True iff the open segment a–b lies in the open interior.
  /// Throws kInvalidParameter when a and b coincide.
  bool chord_is_interior(const BoundaryPoint& a, const BoundaryPoint& b) const;
  bool chords_cross(const BoundaryPoint& a0, const BoundaryPoint& a1, const BoundaryPoint& b0,
                    const BoundaryPoint& b1) const;

  double area() const { return area_; }
  PlanarDomain scaled(double factor) const;

 private:
  PlanarDomain() = default;
  void build();
  // Recognizes disks and regular polygons so exact values and rotations apply.
  void detect_shape();
  std::size_t edge_at(double s) const;
  bool degenerate_pair(const BoundaryPoint& a, const BoundaryPoint& b) const;

  std::vector<BoundaryEdge> edges_;
  std::vector<double> cumulative_;
  std::vector<double> junction_angles_;
  std::vector<Corner> corners_;
  GeometryOptions options_;
  double perimeter_ = 0.0;
  double area_ = 0.0;
  double length_scale_ = 1.0;
  DomainShape shape_ = DomainShape::kGeneric;
  int regular_sides_ = 0;
  int rotation_order_ = 1;
};

}  // namespace escobar

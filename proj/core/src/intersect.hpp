#pragma once

// Low-level intersection predicates shared by geometry and regions.
//
// Every routine takes coordinates already expressed in a caller-chosen frame
// (usually centred on a boundary junction) and works with unit directions, so
// that lengths spanning hundreds of decades never get multiplied together.

#include <optional>
#include <span>
#include <vector>

#include "escobar/geometry.hpp"

namespace escobar::detail {

/// Edge translated into a local frame. `start`/`end` are taken from the
/// domain's junction points so that incident edges meet the frame origin
/// exactly.
struct LocalEdge {
  const BoundaryEdge* edge = nullptr;
  Vec2 start;
  Vec2 end;
  Vec2 center;  // arcs only
};

bool angle_on_arc(const Arc& arc, double phi, double angular_tol);

/// True if the open segment p0–p1 meets the edge at a point farther than
/// rel_tol·|p1−p0| from both chord endpoints. `p0_on`/`p1_on` state that the
/// endpoint is known to lie on the edge, which pins that intersection exactly.
bool open_segment_hits_edge(Vec2 p0, Vec2 p1, const LocalEdge& edge, double rel_tol,
                            bool p0_on = false, bool p1_on = false);

/// Proper transversal crossing of two segments at interior points of both.
bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double rel_tol);

/// Winding number of the closed boundary around q; nullopt if q lies on it.
std::optional<int> winding_number(Vec2 q, std::span<const LocalEdge> edges, double tol);

struct EdgeContact {
  std::vector<Vec2> points;
  bool overlap = false;
};

/// Intersections of two edges in global coordinates.
EdgeContact intersect_edges(const BoundaryEdge& a, const BoundaryEdge& b, double tol);

}  // namespace escobar::detail

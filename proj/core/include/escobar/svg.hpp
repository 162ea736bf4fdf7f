#pragma once

#include <string>

#include "escobar/geometry.hpp"
#include "escobar/regions.hpp"

namespace escobar {

struct SvgOptions {
  int size = 800;       // square canvas, pixels
  double margin = 0.06; // fraction of the canvas left free on each side
  std::string title;
};

/// Domain boundary plus each region's exterior arcs (bold) and chords
/// (dotted). Output depends only on the inputs.
std::string render_svg(const PlanarDomain& domain, const TupleCandidate& tuple,
                       const SvgOptions& options = {});

}  // namespace escobar

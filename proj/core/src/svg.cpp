#include "escobar/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace escobar {
namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string fixed(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;
  std::array<char, 48> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 4);
  return std::string(buf.data(), res.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(const PlanarDomain& d, const SvgOptions& o) : size_(o.size) {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    constexpr int kSamples = 64;
    for (const BoundaryEdge& e : d.edges()) {
      for (int i = 0; i <= kSamples; ++i) {
        const Vec2 p = e.point_at(e.length() * i / kSamples);
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
      }
    }
    const double usable = size_ * (1.0 - 2.0 * o.margin);
    scale_ = usable / std::max(xmax - xmin, ymax - ymin);
    cx_ = 0.5 * (xmin + xmax);
    cy_ = 0.5 * (ymin + ymax);
  }

  std::string xy(Vec2 p) const {
    return fixed(0.5 * size_ + (p.x - cx_) * scale_) + " " +
           fixed(0.5 * size_ - (p.y - cy_) * scale_);
  }
  double scale() const { return scale_; }

 private:
  int size_;
  double scale_ = 1.0;
  double cx_ = 0.0;
  double cy_ = 0.0;
};

// Path commands for the boundary run of length `span` starting at `from`.
std::string boundary_run(const PlanarDomain& d, const Canvas& c, const BoundaryPoint& from,
                         double span) {
  std::string path = "M " + c.xy(d.point_at(from));
  const EdgeLocation loc = d.edge_location(from);
  std::size_t e = loc.edge;
  double pos = loc.from_start;
  double remaining = span;
  for (std::size_t guard = 0; guard <= d.edge_count() + 1 && remaining > 0.0; ++guard) {
    const BoundaryEdge& edge = d.edges()[e];
    const double extent = std::min(remaining, edge.length() - pos);
    if (const Arc* arc = edge.as_arc()) {
      // Halves keep every SVG arc below π so the large-arc flag stays 0.
      const int pieces = extent / arc->radius > std::numbers::pi ? 2 : 1;
      for (int i = 1; i <= pieces; ++i) {
        const Vec2 p = edge.point_at(pos + extent * i / pieces);
        const std::string r = fixed(arc->radius * c.scale());
        path += " A " + r + " " + r + " 0 0 " + (arc->sweep > 0.0 ? "0 " : "1 ") + c.xy(p);
      }
    } else {
      path += " L " + c.xy(edge.point_at(pos + extent));
    }
    remaining -= extent;
    pos = 0.0;
    e = (e + 1) % d.edge_count();
  }
  return path;
}

}  // namespace

std::string render_svg(const PlanarDomain& domain, const TupleCandidate& tuple,
                       const SvgOptions& options) {
  const Canvas canvas(domain, options);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size << "\" height=\""
     << options.size << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n";
  if (!options.title.empty()) os << "  <title>" << escape(options.title) << "</title>\n";
  os << "  <rect id=\"background\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <path id=\"boundary\" d=\""
     << boundary_run(domain, canvas, {0, 0.0}, domain.perimeter()) << " Z\" fill=\"#f4f4f4\" "
     << "stroke=\"#888888\" stroke-width=\"1\"/>\n";

  for (std::size_t i = 0; i < tuple.regions.size(); ++i) {
    const Region& region = tuple.regions[i];
    const char* color = kPalette[i % kPalette.size()];
    os << "  <g id=\"region-" << i << "\" class=\""
       << (std::holds_alternative<Cap>(region) ? "cap" : "strip") << "\">\n";
    std::size_t j = 0;
    for (const Interval& iv : exterior_intervals(region)) {
      const double span = domain.forward_span(iv.from, iv.to);
      if (span > 0.0) {
        os << "    <path id=\"region-" << i << "-exterior-" << j << "\" d=\""
           << boundary_run(domain, canvas, iv.from, span) << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
      }
      ++j;
    }
    j = 0;
    for (const auto& [a, b] : region_chords(region)) {
      os << "    <path id=\"region-" << i << "-chord-" << j++ << "\" d=\"M "
         << canvas.xy(domain.point_at(a)) << " L " << canvas.xy(domain.point_at(b))
         << "\" fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"1.5\" stroke-dasharray=\"2 4\"/>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace escobar

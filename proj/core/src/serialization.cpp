#include "escobar/serialization.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "escobar/error.hpp"
#include "json.hpp"

namespace escobar {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what,
                              std::optional<std::size_t> edge = std::nullopt) {
  throw Error(ErrorCode::kParse, what, edge);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

double number_field(const json& obj, const char* key, std::optional<std::size_t> edge) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    parse_error(std::string("missing or non-numeric \"") + key + "\"", edge);
  }
  const double v = it->get<double>();
  if (!std::isfinite(v)) parse_error(std::string("non-finite \"") + key + "\"", edge);
  return v;
}

Vec2 point_field(const json& obj, const char* key, std::size_t edge) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_array() || it->size() != 2 || !(*it)[0].is_number() ||
      !(*it)[1].is_number()) {
    parse_error(std::string("\"") + key + "\" must be [x, y]", edge);
  }
  return {(*it)[0].get<double>(), (*it)[1].get<double>()};
}

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

json position_json(const BoundaryPoint& p) {
  if (p.junction == 0) return p.offset;
  return json{{"junction", p.junction}, {"offset", p.offset}};
}

BoundaryPoint position_from_json(const json& j) {
  if (j.is_number()) return BoundaryPoint::at(j.get<double>());
  if (j.is_object()) {
    const auto jn = j.find("junction");
    if (jn == j.end() || !jn->is_number_unsigned()) parse_error("position needs a \"junction\" index");
    return {jn->get<std::size_t>(), number_field(j, "offset", std::nullopt)};
  }
  parse_error("position must be a number or {\"junction\", \"offset\"}");
}

json cap_json(const Cap& c) {
  return json{{"kind", "cap"}, {"a", position_json(c.a)}, {"b", position_json(c.b)}};
}

Cap cap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) parse_error("cap needs \"a\" and \"b\"");
  return {position_from_json(j["a"]), position_from_json(j["b"])};
}

json region_json(const Region& r) {
  if (const Cap* c = std::get_if<Cap>(&r)) return cap_json(*c);
  const Strip& s = std::get<Strip>(r);
  return json{{"kind", "strip"}, {"inner", cap_json(s.inner)}, {"outer", cap_json(s.outer)}};
}

Region region_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    parse_error("region needs a \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "cap") return cap_from_json(j);
  if (kind == "strip") {
    if (!j.contains("inner") || !j.contains("outer")) parse_error("strip needs \"inner\" and \"outer\"");
    return Strip{cap_from_json(j["inner"]), cap_from_json(j["outer"])};
  }
  parse_error("unknown region kind \"" + kind + "\"");
}

json tuple_json(const TupleCandidate& t) {
  json regions = json::array();
  for (const Region& r : t.regions) regions.push_back(region_json(r));
  return json{{"regions", regions}};
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

PlanarDomain parse_domain(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    parse_error("domain needs an \"edges\" array");
  }
  GeometryOptions options;
  if (doc.contains("tau")) options.tau = number_field(doc, "tau", std::nullopt);
  std::vector<BoundaryEdge> edges;
  const json& list = doc["edges"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& e = list[i];
    if (!e.is_object() || !e.contains("type") || !e["type"].is_string()) {
      parse_error("edge " + std::to_string(i) + " needs a \"type\"", i);
    }
    const std::string type = e["type"].get<std::string>();
    try {
      if (type == "segment") {
        edges.push_back(BoundaryEdge::segment(point_field(e, "from", i), point_field(e, "to", i)));
      } else if (type == "arc") {
        const auto ccw = e.find("ccw");
        if (ccw != e.end() && !ccw->is_boolean()) parse_error("\"ccw\" must be a boolean", i);
        edges.push_back(BoundaryEdge::arc(point_field(e, "center", i), number_field(e, "radius", i),
                                          number_field(e, "start_angle", i),
                                          number_field(e, "end_angle", i),
                                          ccw == e.end() || ccw->get<bool>()));
      } else {
        parse_error("edge " + std::to_string(i) + " has unknown type \"" + type + "\"", i);
      }
    } catch (const Error& err) {
      if (err.edge_index()) throw;
      throw Error(err.code(), "edge " + std::to_string(i) + ": " + err.what(), i);
    }
  }
  return PlanarDomain(std::move(edges), options);
}

std::string domain_to_json(const PlanarDomain& domain) {
  json edges = json::array();
  for (const BoundaryEdge& e : domain.edges()) {
    if (const Segment* s = e.as_segment()) {
      edges.push_back({{"type", "segment"}, {"from", point_json(s->from)}, {"to", point_json(s->to)}});
    } else {
      const Arc& a = *e.as_arc();
      edges.push_back({{"type", "arc"},
                       {"center", point_json(a.center)},
                       {"radius", a.radius},
                       {"start_angle", a.start_angle},
                       {"end_angle", a.end_angle()},
                       {"ccw", a.sweep > 0.0}});
    }
  }
  return json{{"edges", edges}}.dump(2) + "\n";
}

TupleCandidate parse_tuple(std::string_view text) {
  const json doc = parse_json(text);
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("regions")) parse_error("tuple needs a \"regions\" array");
    list = &doc["regions"];
  }
  if (!list->is_array()) parse_error("tuple regions must be an array");
  TupleCandidate t;
  for (const json& r : *list) t.regions.push_back(region_from_json(r));
  return t;
}

std::string tuple_to_json(const TupleCandidate& tuple) { return tuple_json(tuple).dump(2) + "\n"; }

std::string report_to_json(const BoundReport& report) {
  const json doc{{"value", finite_or_null(report.value)},
                 {"kind", to_string(report.kind)},
                 {"method", to_string(report.method)},
                 {"provenance", report.provenance},
                 {"evaluations", report.evaluations},
                 {"grid_points", report.grid_points},
                 {"witness", tuple_json(report.witness)}};
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PlanarDomain load_domain(const std::filesystem::path& path) {
  return parse_domain(read_text_file(path));
}

TupleCandidate load_tuple(const std::filesystem::path& path) {
  return parse_tuple(read_text_file(path));
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

std::string csv_row(std::span<const std::string> fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out;
}

std::string region_report_csv(const PlanarDomain& domain, const TupleCandidate& tuple) {
  std::string out = "region,kind,interior,exterior,eta\n";
  for (std::size_t i = 0; i < tuple.regions.size(); ++i) {
    const Region& r = tuple.regions[i];
    const std::string row[] = {std::to_string(i),
                               std::holds_alternative<Cap>(r) ? "cap" : "strip",
                               format_number(interior_length(domain, r)),
                               format_number(exterior_length(domain, r)),
                               format_number(eta_partial(domain, r))};
    out += csv_row(row) + "\n";
  }
  return out;
}

}  // namespace escobar

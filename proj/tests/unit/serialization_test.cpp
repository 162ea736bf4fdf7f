#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "escobar/constructions.hpp"
#include "escobar/search.hpp"
#include "escobar/serialization.hpp"
#include "escobar/svg.hpp"

using namespace escobar;

namespace {

const char* kLShape = R"({"edges": [
  {"type": "segment", "from": [0, 0], "to": [2, 0]},
  {"type": "segment", "from": [2, 0], "to": [2, 1]},
  {"type": "segment", "from": [2, 1], "to": [1, 1]},
  {"type": "segment", "from": [1, 1], "to": [1, 2]},
  {"type": "segment", "from": [1, 2], "to": [0, 2]},
  {"type": "segment", "from": [0, 2], "to": [0, 0]}]})";

struct Caught {
  ErrorCode code = ErrorCode::kParse;
  std::optional<std::size_t> edge;
  bool thrown = false;
};

Caught catch_error(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.code(), e.edge_index(), true};
  }
  return {};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(DomainJson, ParsesPolygon) {
  const PlanarDomain d = parse_domain(kLShape);
  EXPECT_EQ(d.edge_count(), 6u);
  EXPECT_NEAR(d.area(), 3.0, 1e-14);
  EXPECT_NEAR(d.perimeter(), 8.0, 1e-14);
}

TEST(DomainJson, ParsesArcs) {
  const PlanarDomain d = parse_domain(R"({"edges": [
    {"type": "segment", "from": [-1, 0], "to": [1, 0]},
    {"type": "arc", "center": [0, 0], "radius": 1, "start_angle": 0,
     "end_angle": 3.141592653589793, "ccw": true}]})");
  EXPECT_NEAR(d.area(), std::numbers::pi / 2, 1e-12);
}

TEST(DomainJson, RoundTrip) {
  for (const PlanarDomain& d : {parse_domain(kLShape), PlanarDomain::make_disk(1.5),
                                PlanarDomain::make_regular_polygon(7)}) {
    const std::string text = domain_to_json(d);
    const PlanarDomain back = parse_domain(text);
    EXPECT_EQ(back.edge_count(), d.edge_count());
    EXPECT_NEAR(back.area(), d.area(), 1e-12);
    EXPECT_NEAR(back.perimeter(), d.perimeter(), 1e-12);
    EXPECT_EQ(back.shape(), d.shape());
    EXPECT_EQ(domain_to_json(back), text);
  }
}

TEST(DomainJson, Errors) {
  EXPECT_EQ(catch_error([] { parse_domain("{"); }).code, ErrorCode::kParse);
  EXPECT_EQ(catch_error([] { parse_domain(R"({"vertices": []})"); }).code, ErrorCode::kParse);
  const Caught bad_type = catch_error([] {
    parse_domain(R"({"edges": [
      {"type": "segment", "from": [0, 0], "to": [1, 0]},
      {"type": "spline", "from": [1, 0], "to": [0, 1]},
      {"type": "segment", "from": [0, 1], "to": [0, 0]}]})");
  });
  EXPECT_EQ(bad_type.code, ErrorCode::kParse);
  EXPECT_EQ(bad_type.edge, std::optional<std::size_t>(1));
  const Caught gap = catch_error([] {
    parse_domain(R"({"edges": [
      {"type": "segment", "from": [0, 0], "to": [1, 0]},
      {"type": "segment", "from": [1, 0], "to": [0, 1]},
      {"type": "segment", "from": [0, 1], "to": [0, 0.5]}]})");
  });
  EXPECT_TRUE(gap.thrown);
  EXPECT_EQ(gap.code, ErrorCode::kInvalidGeometry);
  EXPECT_EQ(gap.edge, std::optional<std::size_t>(2));
}

TEST(TupleJson, RoundTrip) {
  const PlanarDomain d = parse_domain(kLShape);
  TupleCandidate t = equal_boundary_tuple(d, 2, 0.5);
  const Cap outer{BoundaryPoint{0, 0.2}, BoundaryPoint{3, 0.7}};
  const Cap inner{BoundaryPoint{0, 0.6}, BoundaryPoint{3, 0.1}};
  t.regions.emplace_back(Strip{inner, outer});
  const std::string text = tuple_to_json(t);
  const TupleCandidate back = parse_tuple(text);
  ASSERT_EQ(back.regions.size(), t.regions.size());
  for (std::size_t i = 0; i < t.regions.size(); ++i) {
    EXPECT_EQ(back.regions[i].index(), t.regions[i].index());
    EXPECT_EQ(eta_partial(d, back.regions[i]), eta_partial(d, t.regions[i]));
  }
  EXPECT_EQ(tuple_to_json(back), text);
}

TEST(TupleJson, AcceptsBareArrayAndArclengths) {
  const PlanarDomain d = parse_domain(kLShape);
  const TupleCandidate t = parse_tuple(R"([{"kind":"cap","a":0.5,"b":4.5},
    {"kind":"strip","inner":{"kind":"cap","a":5.2,"b":7.8},
                    "outer":{"kind":"cap","a":5.1,"b":7.9}}])");
  ASSERT_EQ(t.regions.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<Strip>(t.regions[1]));
  EXPECT_NEAR(exterior_length(d, t.regions[0]), 4.0, 1e-14);
  EXPECT_NEAR(exterior_length(d, t.regions[1]), 0.2, 1e-14);
}

TEST(TupleJson, Errors) {
  EXPECT_EQ(catch_error([] { parse_tuple(R"([{"kind":"blob"}])"); }).code, ErrorCode::kParse);
  EXPECT_EQ(catch_error([] { parse_tuple(R"([{"kind":"cap","a":1}])"); }).code, ErrorCode::kParse);
  EXPECT_EQ(catch_error([] { parse_tuple(R"({"regions": 3})"); }).code, ErrorCode::kParse);
  EXPECT_EQ(catch_error([] { parse_tuple(R"([{"kind":"cap","a":"x","b":1}])"); }).code,
            ErrorCode::kParse);
}

TEST(ReportJson, Fields) {
  BoundReport r;
  r.value = 0.75;
  r.kind = BoundKind::kExact;
  r.method = SearchMethod::kEnumeration;
  r.provenance = "test";
  r.evaluations = 12;
  r.grid_points = 24;
  r.witness = inscribed_kgon_tuple(6, 3);
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j.at("value").get<double>(), 0.75);
  EXPECT_EQ(j.at("kind").get<std::string>(), "Exact");
  EXPECT_EQ(j.at("evaluations").get<int>(), 12);
  EXPECT_EQ(parse_tuple(j.at("witness").dump()).regions.size(), 3u);

  r.value = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(nlohmann::json::parse(report_to_json(r)).at("value").is_null());
}

TEST(Csv, NumberFormat) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(format_number(std::numbers::pi * 1e6), "3141592.65359");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-2.5e-20), "-2.5e-20");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  for (double v : {0.826993343132688, 1.0 / 7.0, 123456.789012345}) {
    EXPECT_NEAR(std::stod(format_number(v)), v, 1e-11 * std::abs(v));
  }
}

TEST(Csv, Rows) {
  const std::vector<std::string> plain{"a", "1", "b"};
  EXPECT_EQ(csv_row(plain), "a,1,b");
  const std::vector<std::string> quoted{"x,y", "say \"hi\"", ""};
  EXPECT_EQ(csv_row(quoted), "\"x,y\",\"say \"\"hi\"\"\",");
}

TEST(Csv, RegionReport) {
  const PlanarDomain hex = PlanarDomain::make_regular_polygon(6);
  const std::string csv = region_report_csv(hex, inscribed_kgon_tuple(6, 3));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "region,kind,interior,exterior,eta");
  EXPECT_EQ(count(csv, "\n"), 4u);
  EXPECT_EQ(count(csv, ",0.75\n"), 3u);
}

TEST(Files, MissingFile) {
  EXPECT_EQ(catch_error([] { read_text_file("/nonexistent/domain.json"); }).code,
            ErrorCode::kParse);
}

TEST(Svg, StructureAndDeterminism) {
  const PlanarDomain d = parse_domain(kLShape);
  const TupleCandidate t = enumerate_caps(d, 3, 12).witness;
  const std::string a = render_svg(d, t);
  EXPECT_EQ(a, render_svg(d, t));
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(a, "id=\"boundary\""), 1u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(count(a, "id=\"region-" + std::to_string(i) + "\""), 1u);
    EXPECT_EQ(count(a, "id=\"region-" + std::to_string(i) + "-chord-0\""), 1u);
  }
  EXPECT_EQ(count(a, "stroke-dasharray"), 3u);
}

TEST(Svg, ArcDomainAndStrip) {
  const PlanarDomain disk = PlanarDomain::make_disk();
  TupleCandidate t = disk_equal_arc_tuple(2);
  SvgOptions opt;
  opt.title = "a <b>";
  const std::string s = render_svg(disk, t, opt);
  EXPECT_NE(s.find(" A "), std::string::npos);
  EXPECT_NE(s.find("a &lt;b&gt;"), std::string::npos);

  const Vec2 r[] = {{0, 0}, {0.5, 0}, {0.5, 6}, {0, 6}};
  const PlanarDomain rect = PlanarDomain::make_polygon(r);
  const std::string st = render_svg(rect, stripe_tuple(rect, 3, 1.0));
  EXPECT_EQ(count(st, "-chord-1\""), 3u);
}

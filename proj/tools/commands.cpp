#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "escobar/constructions.hpp"
#include "escobar/exact.hpp"
#include "escobar/serialization.hpp"
#include "escobar/svg.hpp"
#include "escobar/symmetry.hpp"
#include "manifest.hpp"

namespace escobar::cli {
namespace {

using nlohmann::json;

int to_int(std::string_view s, const std::string& whole) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw UsageError("bad integer range \"" + whole + "\"");
  }
  return v;
}

double to_double(std::string_view s, const std::string& whole) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !(v > 0.0)) {
    throw UsageError("bad dimension in \"" + whole + "\"");
  }
  return v;
}

// "disk", "disk:R", "regular:N", "rectangle:W:H", or a domain JSON file.
PlanarDomain resolve_domain(const std::string& source, RunManifest& manifest) {
  if (source == "disk") return PlanarDomain::make_disk();
  if (source.starts_with("disk:")) return PlanarDomain::make_disk(to_double(source.substr(5), source));
  if (source.starts_with("regular:")) {
    return PlanarDomain::make_regular_polygon(to_int(source.substr(8), source));
  }
  if (source.starts_with("rectangle:")) {
    const std::string rest = source.substr(10);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw UsageError("rectangle needs W:H");
    const double w = 0.5 * to_double(rest.substr(0, colon), source);
    const double h = 0.5 * to_double(rest.substr(colon + 1), source);
    const Vec2 pts[] = {{-w, -h}, {w, -h}, {w, h}, {-w, h}};
    return PlanarDomain::make_polygon(pts);
  }
  const std::string text = read_text_file(source);
  manifest.add_input(source, text);
  return parse_domain(text);
}

json config_json(const SearchConfig& c) {
  return json{{"grid_points", c.grid_points},
              {"max_grid_points", c.max_grid_points},
              {"caps", c.caps},
              {"corner_strips", c.corner_strips},
              {"restarts", c.restarts},
              {"max_iterations", c.max_iterations},
              {"seed", c.seed},
              {"tolerance", c.tolerance},
              {"budget", c.budget},
              {"auto_grid_budget", c.auto_grid_budget},
              {"equal_boundary_samples", c.equal_boundary_samples},
              {"refine_max_k", c.refine_max_k}};
}

std::string row(std::initializer_list<std::string> fields) {
  return csv_row(std::vector<std::string>(fields)) + "\n";
}

void write_svg(const std::string& path, const PlanarDomain& domain, const TupleCandidate& tuple,
               const RunManifest& manifest, const std::string& title) {
  if (path.empty()) return;
  SvgOptions opt;
  opt.title = title;
  manifest.emit(path, render_svg(domain, tuple, opt));
}

int report_violations(const std::vector<ViolationReport>& violations) {
  for (const ViolationReport& v : violations) {
    std::cerr << "escobar: region " << v.first;
    if (v.second != v.first) std::cerr << " / " << v.second;
    std::cerr << ": " << to_string(v.predicate) << " (" << v.detail << ")\n";
  }
  return kInput;
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(std::string_view(text).substr(0, dots), text);
    const int hi = to_int(std::string_view(text).substr(dots + 2), text);
    if (lo > hi) throw UsageError("empty range \"" + text + "\"");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(to_int(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

SearchConfig SearchFlags::config() const {
  SearchConfig c;
  c.seed = seed;
  c.grid_points = grid;
  c.restarts = restarts;
  c.budget = budget;
  c.threads = threads;
  return c;
}

int run_exact(const ExactArgs& args, const std::vector<std::string>& argv) {
  if (args.disk == args.regular.has_value()) throw UsageError("give exactly one of --disk or --regular N");
  const std::vector<int> ks = parse_range(args.k);
  if (std::ranges::any_of(ks, [](int k) { return k < 1; })) throw UsageError("k must be positive");
  if (args.regular && *args.regular < 3) throw UsageError("--regular needs N >= 3");

  RunManifest manifest("exact", argv);
  manifest.set_config({{"disk", args.disk}, {"regular", args.regular ? json(*args.regular) : json()},
                       {"k", args.k}});
  std::string csv = "shape,n,k,value,kind,provenance\n";
  for (int k : ks) {
    if (args.disk) {
      csv += row({"disk", "", std::to_string(k), format_number(ik_disk(k)),
                  to_string(BoundKind::kExact), "disk"});
    } else {
      const BoundValue v = ik_regular_polygon(*args.regular, k);
      csv += row({"regular", std::to_string(*args.regular), std::to_string(k),
                  format_number(v.value), to_string(v.kind), v.provenance});
    }
  }
  manifest.emit(args.out, csv);
  return kOk;
}

int run_construct(const ConstructArgs& args, const std::vector<std::string>& argv) {
  RunManifest manifest("construct", argv);
  manifest.set_config({{"family", args.family},
                       {"domain", args.domain},
                       {"k", args.k},
                       {"n", args.n},
                       {"corner", args.corner},
                       {"epsilon", args.epsilon},
                       {"schedule", args.schedule},
                       {"offset", args.offset ? json(*args.offset) : json()},
                       {"height", args.height}});
  auto need_domain = [&](const char* fallback) {
    return resolve_domain(args.domain.empty() ? std::string(fallback) : args.domain, manifest);
  };

  std::optional<PlanarDomain> domain;
  TupleCandidate tuple;
  if (args.family == "corner") {
    domain = need_domain("regular:4");
    if (args.schedule != "fine" && args.schedule != "coarse") {
      throw UsageError("--schedule must be fine or coarse");
    }
    CornerScheduleParams p;
    p.corner = args.corner;
    p.k = args.k;
    p.epsilon = args.epsilon;
    p.schedule = args.schedule == "fine" ? DeltaSchedule::kFine : DeltaSchedule::kCoarse;
    tuple = corner_tuple(*domain, p);
  } else if (args.family == "equal-boundary") {
    domain = need_domain("regular:6");
    tuple = equal_boundary_tuple(*domain, args.k, args.offset);
  } else if (args.family == "inscribed") {
    domain = PlanarDomain::make_regular_polygon(args.n);
    tuple = inscribed_kgon_tuple(args.n, args.k);
  } else if (args.family == "disk-arcs") {
    domain = PlanarDomain::make_disk();
    tuple = disk_equal_arc_tuple(args.k, args.offset.value_or(0.0));
  } else if (args.family == "stripe") {
    domain = need_domain("rectangle:0.02:8");
    tuple = stripe_tuple(*domain, args.k, args.height);
  } else {
    throw UsageError("unknown family \"" + args.family +
                     "\" (corner, equal-boundary, inscribed, disk-arcs, stripe)");
  }

  if (const auto violations = validate_tuple(*domain, tuple); !violations.empty()) {
    return report_violations(violations);
  }
  manifest.emit(args.out, tuple_to_json(tuple));
  if (!args.report.empty()) manifest.emit(args.report, region_report_csv(*domain, tuple));
  write_svg(args.svg, *domain, tuple, manifest, args.family);
  std::cerr << "max eta " << format_number(max_eta(*domain, tuple)) << "\n";
  return kOk;
}

int run_optimize(const OptimizeArgs& args, const std::vector<std::string>& argv) {
  RunManifest manifest("optimize", argv);
  const SearchConfig config = args.search.config();
  manifest.set_config({{"domain", args.domain}, {"k", args.k}, {"search", config_json(config)}});
  manifest.set_seed(config.seed);
  if (args.k < 2) throw UsageError("k must be at least 2");
  const PlanarDomain domain = resolve_domain(args.domain, manifest);
  const BoundReport report = estimate_ik(domain, args.k, config);
  manifest.emit(args.out, report_to_json(report));
  write_svg(args.svg, domain, report.witness, manifest, "optimize k=" + std::to_string(args.k));
  return kOk;
}

int run_conjecture_scan(const ScanArgs& args, const std::vector<std::string>& argv) {
  const std::vector<int> ns = parse_range(args.n);
  const std::vector<int> ks = parse_range(args.k);
  if (std::ranges::any_of(ns, [](int n) { return n < 3; })) throw UsageError("n must be >= 3");
  if (std::ranges::any_of(ks, [](int k) { return k < 2; })) throw UsageError("k must be >= 2");

  RunManifest manifest("conjecture-scan", argv);
  const SearchConfig config = args.search.config();
  manifest.set_config({{"n", args.n}, {"k", args.k}, {"search", config_json(config)}});
  manifest.set_seed(config.seed);

  std::string csv = "n,k,bound,kind,method,ik_disk,satisfied\n";
  int satisfied = 0;
  int total = 0;
  for (int n : ns) {
    const PlanarDomain polygon = PlanarDomain::make_regular_polygon(n);
    for (int k : ks) {
      const BoundValue formula = ik_regular_polygon(n, k);
      double bound = formula.value;
      BoundKind kind = formula.kind;
      std::string method = "formula:" + formula.provenance;
      if (formula.kind != BoundKind::kExact) {
        const BoundReport found = estimate_ik(polygon, k, config);
        if (found.value < bound) {
          bound = found.value;
          method = to_string(found.method);
        }
        kind = BoundKind::kUpperBound;
      }
      const double disk = ik_disk(k);
      const bool ok = bound <= disk + kTauNum;
      satisfied += ok ? 1 : 0;
      ++total;
      csv += row({std::to_string(n), std::to_string(k), format_number(bound), to_string(kind),
                  method, format_number(disk), ok ? "true" : "false"});
    }
  }
  manifest.emit(args.out, csv);
  std::cerr << satisfied << " of " << total << " pairs satisfy the disk comparison\n";
  return kOk;
}

int run_symmetry_audit(const AuditArgs& args, const std::vector<std::string>& argv) {
  const std::vector<int> ns = parse_range(args.n);
  if (std::ranges::any_of(ns, [](int n) { return n < 3; })) throw UsageError("n must be >= 3");
  if (args.samples == 0) throw UsageError("--samples must be positive");

  RunManifest manifest("symmetry-audit", argv);
  manifest.set_config({{"n", args.n}, {"samples", args.samples}, {"margin", kAuditMargin}});
  manifest.set_seed(args.seed);
  AuditConfig config;
  config.samples = args.samples;
  config.seed = args.seed;
  config.threads = args.threads;

  std::string csv = "n,suite,samples,failures,worst_margin,status\n";
  bool all = true;
  for (int n : ns) {
    for (const SuiteReport& r : symmetry_audit(n, config)) {
      all = all && r.ok();
      csv += row({std::to_string(n), r.name, std::to_string(r.samples), std::to_string(r.failures),
                  format_number(r.worst_margin), r.ok() ? "pass" : "fail"});
      if (!r.ok()) std::cerr << "escobar: D" << n << " " << r.name << ": " << r.worst_detail << "\n";
    }
  }
  manifest.emit(args.out, csv);
  return all ? kOk : kCheckFailed;
}

int run_render(const RenderArgs& args, const std::vector<std::string>& argv) {
  RunManifest manifest("render", argv);
  manifest.set_config({{"domain", args.domain}, {"tuple", args.tuple}});
  const PlanarDomain domain = resolve_domain(args.domain, manifest);
  const std::string text = read_text_file(args.tuple);
  manifest.add_input(args.tuple, text);
  const TupleCandidate tuple = parse_tuple(text);
  if (const auto violations = validate_tuple(domain, tuple); !violations.empty()) {
    return report_violations(violations);
  }
  SvgOptions opt;
  opt.title = std::filesystem::path(args.tuple).filename().string();
  manifest.emit(args.out, render_svg(domain, tuple, opt));
  return kOk;
}

}  // namespace escobar::cli

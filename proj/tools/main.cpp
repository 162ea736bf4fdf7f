#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "escobar/error.hpp"

using namespace escobar::cli;

namespace {

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Random seed for refinement restarts");
  cmd->add_option("--grid", flags.grid, "Enumeration grid points (0 picks automatically)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--restarts", flags.restarts, "Nelder-Mead restarts")->check(CLI::NonNegativeNumber);
  cmd->add_option("--budget", flags.budget, "Largest enumeration allowed, in placements")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
}

int exit_code_for(const escobar::Error& e) {
  switch (e.code()) {
    case escobar::ErrorCode::kInvalidParameter:
      return kUsage;
    case escobar::ErrorCode::kBudgetExceeded:
      return kBudget;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Bounds on I_k, the k-th Escobar constant, from cap and strip tuples"};
  app.set_version_flag("--version", std::string(ESCOBAR_VERSION));
  app.require_subcommand(1);

  ExactArgs exact;
  auto* c_exact = app.add_subcommand("exact", "Closed-form values for disks and regular polygons");
  c_exact->add_flag("--disk", exact.disk, "Unit disk");
  c_exact->add_option("--regular", exact.regular, "Regular polygon with N sides");
  c_exact->add_option("--k", exact.k, "k values: 3, 2..6 or 2,4,8");
  c_exact->add_option("--out", exact.out, "CSV output file (default stdout)");

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Emit a tuple from a named construction");
  c_construct->add_option("family", construct.family,
                          "corner | equal-boundary | inscribed | disk-arcs | stripe")
      ->required();
  c_construct->add_option("--domain", construct.domain,
                          "Domain JSON file, disk, regular:N or rectangle:W:H");
  c_construct->add_option("--k", construct.k, "Number of regions");
  c_construct->add_option("--n", construct.n, "Polygon sides (inscribed)");
  c_construct->add_option("--corner", construct.corner, "Corner junction index (corner)");
  c_construct->add_option("--epsilon", construct.epsilon, "Innermost leg scale (corner)");
  c_construct->add_option("--schedule", construct.schedule, "fine | coarse (corner)");
  c_construct->add_option("--offset", construct.offset, "Start arclength (equal-boundary, disk-arcs)");
  c_construct->add_option("--height", construct.height, "Stripe height (stripe)");
  c_construct->add_option("--out", construct.out, "Tuple JSON output (default stdout)");
  c_construct->add_option("--report", construct.report, "Per-region CSV output");
  c_construct->add_option("--svg", construct.svg, "SVG figure output");

  OptimizeArgs optimize;
  auto* c_optimize = app.add_subcommand("optimize", "Search for the best upper bound on I_k");
  c_optimize->add_option("domain", optimize.domain, "Domain JSON file, disk, regular:N or rectangle:W:H")
      ->required();
  c_optimize->add_option("--k", optimize.k, "Number of regions")->required();
  add_search_flags(c_optimize, optimize.search);
  c_optimize->add_option("--out", optimize.out, "Report JSON output (default stdout)");
  c_optimize->add_option("--svg", optimize.svg, "Witness SVG output");

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("conjecture-scan", "Compare regular polygons with the disk");
  c_scan->add_option("--n", scan.n, "Polygon sides, e.g. 3..12");
  c_scan->add_option("--k", scan.k, "k values, e.g. 2..12");
  add_search_flags(c_scan, scan.search);
  c_scan->add_option("--out", scan.out, "CSV output (default stdout)");

  AuditArgs audit;
  auto* c_audit = app.add_subcommand("symmetry-audit", "Monte Carlo checks of the symmetrization inequalities");
  c_audit->add_option("n", audit.n, "Polygon sides, e.g. 5 or 3..8")->required();
  c_audit->add_option("--samples", audit.samples, "Samples per suite");
  c_audit->add_option("--seed", audit.seed, "Random seed");
  c_audit->add_option("--threads", audit.threads, "Worker threads (0 = all cores)");
  c_audit->add_option("--out", audit.out, "CSV output (default stdout)");

  RenderArgs render;
  auto* c_render = app.add_subcommand("render", "Draw a domain and a tuple as SVG");
  c_render->add_option("domain", render.domain, "Domain JSON file, disk, regular:N or rectangle:W:H")
      ->required();
  c_render->add_option("tuple", render.tuple, "Tuple JSON file")->required();
  c_render->add_option("--out", render.out, "SVG output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_exact) return run_exact(exact, args);
    if (*c_construct) return run_construct(construct, args);
    if (*c_optimize) return run_optimize(optimize, args);
    if (*c_scan) return run_conjecture_scan(scan, args);
    if (*c_audit) return run_symmetry_audit(audit, args);
    if (*c_render) return run_render(render, args);
  } catch (const UsageError& e) {
    std::cerr << "escobar: " << e.what() << "\n";
    return kUsage;
  } catch (const escobar::Error& e) {
    std::cerr << "escobar: " << escobar::to_string(e.code()) << ": " << e.what();
    if (e.edge_index()) std::cerr << " (edge " << *e.edge_index() << ")";
    std::cerr << "\n";
    return exit_code_for(e);
  }
  return kUsage;
}

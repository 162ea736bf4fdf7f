#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "escobar/search.hpp"

namespace escobar::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kInput = 3, kBudget = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "2..6" or "2,4,7"; throws UsageError.
std::vector<int> parse_range(const std::string& text);

struct SearchFlags {
  std::uint64_t seed = SearchConfig{}.seed;
  int grid = 0;
  int restarts = SearchConfig{}.restarts;
  double budget = SearchConfig{}.budget;
  unsigned threads = 0;
  SearchConfig config() const;
};

struct ExactArgs {
  bool disk = false;
  std::optional<int> regular;
  std::string k = "2..8";
  std::string out;
};

struct ConstructArgs {
  std::string family;
  std::string domain;
  int k = 3;
  int n = 6;
  std::size_t corner = 0;
  double epsilon = 1e-6;
  std::string schedule = "fine";
  std::optional<double> offset;
  double height = 1.0;
  std::string out;
  std::string report;
  std::string svg;
};

struct OptimizeArgs {
  std::string domain;
  int k = 3;
  SearchFlags search;
  std::string out;
  std::string svg;
};

struct ScanArgs {
  std::string n = "3..12";
  std::string k = "2..12";
  SearchFlags search;
  std::string out;
};

struct AuditArgs {
  std::string n;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string out;
};

struct RenderArgs {
  std::string domain;
  std::string tuple;
  std::string out;
};

int run_exact(const ExactArgs& args, const std::vector<std::string>& argv);
int run_construct(const ConstructArgs& args, const std::vector<std::string>& argv);
int run_optimize(const OptimizeArgs& args, const std::vector<std::string>& argv);
int run_conjecture_scan(const ScanArgs& args, const std::vector<std::string>& argv);
int run_symmetry_audit(const AuditArgs& args, const std::vector<std::string>& argv);
int run_render(const RenderArgs& args, const std::vector<std::string>& argv);

}  // namespace escobar::cli

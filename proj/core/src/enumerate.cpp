#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "escobar/search.hpp"

namespace escobar {
namespace {

double log_binomial(double n, double r) {
  if (r < 0.0 || r > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

// First-cap starts that need to be visited: rotations of the domain that map
// the grid to itself move every placement into [0, m/order).
int first_starts(const PlanarDomain& domain, int m) {
  const int order = domain.rotation_order();
  if (order == 0) return 1;
  if (order > 1 && m % order == 0) return m / order;
  return m;
}

struct CapTable {
  int m = 0;
  std::vector<double> eta;  // eta[start * m + length], infinity when the chord is invalid
  std::vector<BoundaryPoint> grid;

  double at(int start, int length) const {
    return eta[static_cast<std::size_t>(start % m) * static_cast<std::size_t>(m) +
               static_cast<std::size_t>(length)];
  }
};

CapTable build_table(const PlanarDomain& domain, int m) {
  CapTable t;
  t.m = m;
  t.grid.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) t.grid.push_back(domain.anchor(domain.perimeter() * i / m));
  t.eta.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), kInfiniteEta);
  for (int i = 0; i < m; ++i) {
    for (int len = 1; len < m; ++len) {
      const Cap cap{t.grid[static_cast<std::size_t>(i)],
                    t.grid[static_cast<std::size_t>((i + len) % m)]};
      bool ok = false;
      try {
        ok = domain.chord_is_interior(cap.a, cap.b);
      } catch (const Error&) {
        ok = false;
      }
      if (ok) {
        t.eta[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
              static_cast<std::size_t>(len)] = eta_partial(domain, Region{cap});
      }
    }
  }
  return t;
}

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::vector<int> cuts;  // start, end pairs in absolute grid units
  std::uint64_t evaluations = 0;
};

bool better(const Best& a, const Best& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.cuts < b.cuts;
}

class Search {
 public:
  Search(const CapTable& table, int k) : table_(table), k_(k), cuts_(2 * static_cast<std::size_t>(k)) {}

  void run_from(int first, Best& best) {
    first_ = first;
    best_ = &best;
    dfs(0, first, 0.0);
  }

 private:
  void dfs(int depth, int from, double current) {
    const int m = table_.m;
    const int caps_left = k_ - depth;
    const int end_limit = first_ + m;
    const int start_limit = depth == 0 ? first_ + 1 : m;
    for (int start = from; start < start_limit; ++start) {
      // every remaining cap needs at least one cell
      if (start + caps_left > end_limit) break;
      const int max_len = end_limit - start - (caps_left - 1);
      for (int len = 1; len <= max_len && len < m; ++len) {
        ++best_->evaluations;
        const double value = std::max(current, table_.at(start, len));
        if (value >= best_->value) continue;
        cuts_[2 * static_cast<std::size_t>(depth)] = start;
        cuts_[2 * static_cast<std::size_t>(depth) + 1] = start + len;
        if (caps_left == 1) {
          best_->value = value;
          best_->cuts = cuts_;
        } else {
          dfs(depth + 1, start + len, value);
        }
      }
    }
  }

  const CapTable& table_;
  int k_;
  int first_ = 0;
  std::vector<int> cuts_;
  Best* best_ = nullptr;
};

}  // namespace

double enumeration_placements(const PlanarDomain& domain, int k, int m) {
  if (k < 1 || m < 2 * k) return 0.0;
  const double log_count = std::log(static_cast<double>(first_starts(domain, m))) +
                           log_binomial(m + k - 1.0, 2.0 * k - 1.0) - std::log(static_cast<double>(k));
  return std::exp(log_count);
}

int automatic_grid(const PlanarDomain& domain, int k, const SearchConfig& config) {
  int base = 1;
  if (domain.shape() == DomainShape::kDisk) base = k;
  if (domain.shape() == DomainShape::kRegularPolygon) base = 2 * domain.regular_sides();
  const double limit = std::min(config.auto_grid_budget, config.budget);
  int chosen = 0;
  for (int m = base; m <= config.max_grid_points; m += base) {
    if (m < 2 * k) continue;
    if (enumeration_placements(domain, k, m) > limit) break;
    chosen = m;
  }
  return chosen;
}

BoundReport enumerate_caps(const PlanarDomain& domain, int k, int m, const SearchConfig& config) {
  if (k < 2) throw Error(ErrorCode::kInvalidParameter, "k must be at least 2");
  if (m < 2 * k) throw Error(ErrorCode::kInvalidParameter, "grid needs at least 2k points");
  const double placements = enumeration_placements(domain, k, m);
  if (placements > config.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration needs about " + std::to_string(placements) +
                    " placements, budget is " + std::to_string(config.budget))
        .with_required_evaluations(placements);
  }

  const CapTable table = build_table(domain, m);
  const int starts = first_starts(domain, m);
  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(starts));

  // Worker w takes first-cap starts w, w + workers, …; each keeps its own
  // incumbent, and the final reduction orders by (value, cut vector).
  std::vector<Best> partial(workers);
  auto work = [&](unsigned w) {
    Search search(table, k);
    for (int first = static_cast<int>(w); first < starts; first += static_cast<int>(workers)) {
      search.run_from(first, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }

  Best best;
  std::uint64_t evaluations = 0;
  for (const Best& b : partial) {
    evaluations += b.evaluations;
    if (!b.cuts.empty() && (best.cuts.empty() || better(b, best))) best = b;
  }

  BoundReport report;
  report.method = SearchMethod::kEnumeration;
  report.provenance = "enumeration:m=" + std::to_string(m);
  report.grid_points = m;
  report.evaluations = evaluations;
  if (best.cuts.empty()) {
    throw Error(ErrorCode::kConstructionFailure, "no valid cap placement on this grid");
  }
  for (int i = 0; i < k; ++i) {
    const int s = best.cuts[2 * static_cast<std::size_t>(i)] % m;
    const int e = best.cuts[2 * static_cast<std::size_t>(i) + 1] % m;
    report.witness.regions.emplace_back(
        Cap{table.grid[static_cast<std::size_t>(s)], table.grid[static_cast<std::size_t>(e)]});
  }
  report.value = max_eta(domain, report.witness);
  return report;
}

}  // namespace escobar

#include <benchmark/benchmark.h>

#include "escobar/search.hpp"

using namespace escobar;

namespace {

PlanarDomain l_shape() {
  const Vec2 pts[] = {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  return PlanarDomain::make_polygon(pts);
}

void BM_EnumerateCaps(benchmark::State& state) {
  const PlanarDomain d = l_shape();
  const int k = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  SearchConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_caps(d, k, m, cfg).value);
  state.counters["placements"] = enumeration_placements(d, k, m);
}
BENCHMARK(BM_EnumerateCaps)->Args({2, 48})->Args({3, 36})->Args({4, 24})->Unit(benchmark::kMillisecond);

void BM_EstimateRegular(benchmark::State& state) {
  const PlanarDomain d = PlanarDomain::make_regular_polygon(static_cast<int>(state.range(0)));
  SearchConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_ik(d, 3, cfg).value);
}
BENCHMARK(BM_EstimateRegular)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CornerFamily(benchmark::State& state) {
  const PlanarDomain d = l_shape();
  SearchConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(corner_family_bound(d, static_cast<int>(state.range(0)), cfg).value);
  }
}
BENCHMARK(BM_CornerFamily)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

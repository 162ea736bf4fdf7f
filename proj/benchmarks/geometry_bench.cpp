#include <benchmark/benchmark.h>

#include <random>

#include "escobar/geometry.hpp"
#include "escobar/regions.hpp"

using namespace escobar;

namespace {

PlanarDomain l_shape() {
  const Vec2 pts[] = {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  return PlanarDomain::make_polygon(pts);
}

void BM_ChordIsInterior(benchmark::State& state) {
  const PlanarDomain d = state.range(0) == 0 ? l_shape()
                                             : PlanarDomain::make_regular_polygon(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, d.perimeter());
  std::vector<BoundaryPoint> pts;
  for (int i = 0; i < 256; ++i) pts.push_back(d.anchor(u(rng)));
  std::size_t i = 0;
  for (auto _ : state) {
    const BoundaryPoint& a = pts[i % pts.size()];
    const BoundaryPoint& b = pts[(i * 7 + 3) % pts.size()];
    bool ok = false;
    try {
      ok = d.chord_is_interior(a, b);
    } catch (const Error&) {
    }
    benchmark::DoNotOptimize(ok);
    ++i;
  }
}
BENCHMARK(BM_ChordIsInterior)->Arg(0)->Arg(8)->Arg(64);

void BM_MeasureCap(benchmark::State& state) {
  const PlanarDomain d = PlanarDomain::make_regular_polygon(12);
  const Cap cap{d.anchor(0.3), d.anchor(2.1)};
  for (auto _ : state) benchmark::DoNotOptimize(measure(d, cap));
}
BENCHMARK(BM_MeasureCap);

}  // namespace

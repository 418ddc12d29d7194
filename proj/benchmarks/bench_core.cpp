#include <benchmark/benchmark.h>

#include <vector>

#include "spharea/area.hpp"
#include "spharea/error_bench.hpp"

using namespace spharea;

namespace {

void BM_GenerateFibonacci(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_fibonacci(state.range(0)));
  state.SetItemsProcessed(state.iterations() * (2 * state.range(0) + 1));
}
BENCHMARK(BM_GenerateFibonacci)->Arg(500)->Arg(5000)->Arg(500000);

void BM_GenerateLatLon(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_latlon(state.range(0)));
  state.SetItemsProcessed(state.iterations() * latlon_point_count(state.range(0)));
}
BENCHMARK(BM_GenerateLatLon)->Arg(23)->Arg(71)->Arg(720);

void BM_GreatCircleDistance(benchmark::State& state) {
  const GeoPoint p(12.5, -40.0);
  const GeoPoint q(-33.0, 151.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(great_circle_distance(p, q));
  }
}
BENCHMARK(BM_GreatCircleDistance);

void BM_EstimateCap(benchmark::State& state) {
  const Lattice lattice = generate_fibonacci(state.range(0));
  const Cap cap(GeoPoint(20.0, 30.0), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_area(lattice, cap));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lattice.size()));
}
BENCHMARK(BM_EstimateCap)->Arg(500)->Arg(5000)->Arg(500000);

void BM_EstimateCapUnion(benchmark::State& state) {
  const Lattice lattice = generate_fibonacci(5000);
  std::vector<Cap> caps;
  for (int i = 0; i < state.range(0); ++i) caps.emplace_back(GeoPoint(-60.0 + 10.0 * i, 17.0 * i), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_cap_union_area(lattice, caps));
}
BENCHMARK(BM_EstimateCapUnion)->Arg(1)->Arg(8);

void BM_RunCell(benchmark::State& state) {
  const Lattice lattice = generate_fibonacci(500);
  const RngStream stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(run_cell(lattice, 0.25, state.range(0), stream));
}
BENCHMARK(BM_RunCell)->Arg(2000);

void BM_ExactMaxError(benchmark::State& state) {
  const Lattice lattice = generate_fibonacci(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_max_error_for_center(lattice, GeoPoint(10.0, 10.0), 0.5));
  }
}
BENCHMARK(BM_ExactMaxError)->Arg(50)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();

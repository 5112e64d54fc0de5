#include <benchmark/benchmark.h>

#include "blockerlab/blocker_families.hpp"
#include "blockerlab/ham_paths.hpp"

namespace bl = blockerlab;

static void BM_CountShps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bl::count_shps(n));
  state.counters["paths"] = static_cast<double>(bl::count_shps(n));
}
BENCHMARK(BM_CountShps)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_BlocksCrossing19(benchmark::State& state) {
  const bl::EdgeSet s = bl::generate(bl::ClassBParams{10, 0, 1, 3, 4, 1, 2, {2}, {2}});
  for (auto _ : state) benchmark::DoNotOptimize(bl::blocks(s));
}
BENCHMARK(BM_BlocksCrossing19)->Unit(benchmark::kMicrosecond);

static void BM_BlocksBoundaryPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<bl::Edge> path;
  for (int t = 1; t <= (n + 1) / 2; ++t) path.emplace_back(t - 1, t);
  const bl::EdgeSet s(n, path);
  for (auto _ : state) benchmark::DoNotOptimize(bl::blocks(s));
}
BENCHMARK(BM_BlocksBoundaryPath)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMicrosecond);

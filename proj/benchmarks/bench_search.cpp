#include <benchmark/benchmark.h>

#include <random>

#include "blockerlab/exhaustive.hpp"
#include "blockerlab/witnesses.hpp"

namespace bl = blockerlab;

static void BM_EnumeratePruned(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bl::EnumerationOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bl::enumerate_blockers_pruned(n, opts));
}
BENCHMARK(BM_EnumeratePruned)->DenseRange(7, 11, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateBruteForce(benchmark::State& state) {
  bl::EnumerationOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bl::enumerate_blockers_bruteforce(7, opts));
}
BENCHMARK(BM_EnumerateBruteForce)->Unit(benchmark::kMillisecond);

static void BM_Dispatcher(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  auto edges = bl::all_edges(n);
  std::vector<bl::EdgeSet> sets;
  for (int i = 0; i < 256; ++i) {
    std::shuffle(edges.begin(), edges.end(), rng);
    sets.emplace_back(n, std::vector<bl::Edge>(edges.begin(), edges.begin() + (n + 1) / 2));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bl::find_structured_witness(sets[i++ % sets.size()]));
}
BENCHMARK(BM_Dispatcher)->Arg(9)->Arg(15)->Arg(21)->Unit(benchmark::kMicrosecond);

static void BM_ClassifyBlockers(benchmark::State& state) {
  const auto sets = bl::parametric_blockers(13);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bl::classify(sets[i++ % sets.size()]));
}
BENCHMARK(BM_ClassifyBlockers)->Unit(benchmark::kMicrosecond);

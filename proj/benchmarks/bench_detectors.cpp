#include <benchmark/benchmark.h>

#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/matching.hpp"

using namespace ramsey;

static void BM_FindFanG1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_g1(n);
  for (auto _ : state) benchmark::DoNotOptimize(find_fan(g.view(), Color::Red, n));
}
BENCHMARK(BM_FindFanG1)->DenseRange(4, 10, 2);

static void BM_FindBlueK4G2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_g2(sample_g2_spec(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(find_clique(g.view(), Color::Blue, 4));
}
BENCHMARK(BM_FindBlueK4G2)->DenseRange(4, 10, 2);

static void BM_RedCliqueNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_g2(sample_g2_spec(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g.view(), Color::Red));
}
BENCHMARK(BM_RedCliqueNumber)->DenseRange(4, 10, 2);

static void BM_MatchingNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_g1(n);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(g.view(), Color::Blue, g.view().vertices()));
}
BENCHMARK(BM_MatchingNumber)->DenseRange(4, 10, 2);

static void BM_IsFreeLowerBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_lower_bound(n).graph;
  const TargetPair t{Target::fan(n), Target::clique(4)};
  for (auto _ : state) benchmark::DoNotOptimize(is_free(g, t));
}
BENCHMARK(BM_IsFreeLowerBound)->DenseRange(4, 8, 1);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ramsey/constructions.hpp"
#include "ramsey/star_search.hpp"

using namespace ramsey;

static void BM_MaxExtensionG1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StarSearchOptions o;
  o.budget = Budget::unlimited();
  o.structural_prunes = state.range(1) != 0;
  const auto base = build_g1(n);
  const TargetPair t{Target::fan(n), Target::clique(4)};
  int k = 0;
  for (auto _ : state) k = max_star_extension(base, t, o).max_k;
  state.counters["max_k"] = k;
}
BENCHMARK(BM_MaxExtensionG1)->Args({2, 0})->Args({2, 1})->Args({3, 1})->Args({4, 1})->Unit(benchmark::kMillisecond);

static void BM_FixedDegreeG1(benchmark::State& state) {
  StarSearchOptions o;
  o.budget = Budget::unlimited();
  const auto base = build_g1(4);
  const TargetPair t{Target::fan(4), Target::clique(4)};
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_star_free(base, k, t, o).status);
}
BENCHMARK(BM_FixedDegreeG1)->Arg(17)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ramsey/search.hpp"

using namespace ramsey;

static SearchOptions options(SymmetryScheme s) {
  SearchOptions o;
  o.budget = Budget::unlimited();
  o.symmetry = s;
  return o;
}

static void BM_Exhaust3K2K4(benchmark::State& state) {
  const auto s = static_cast<SymmetryScheme>(state.range(0));
  const TargetPair t{Target::matching(3), Target::clique(4)};
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = search_free_coloring(8, t, options(s)).stats.nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
  state.SetLabel(std::string(to_string(s)));
}
BENCHMARK(BM_Exhaust3K2K4)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_ExhaustF2K3(benchmark::State& state) {
  const TargetPair t{Target::fan(2), Target::clique(3)};
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = search_free_coloring(9, t, options(SymmetryScheme::FirstVertexSorted)).stats.nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExhaustF2K3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

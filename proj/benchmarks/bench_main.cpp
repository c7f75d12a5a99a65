#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>

#include "hyperstream/estimators.hpp"
#include "hyperstream/generators.hpp"
#include "hyperstream/simplex_count.hpp"

using namespace hyperstream;

namespace {

const Hypergraph& instance(std::int64_t m) {
  static std::map<std::int64_t, Hypergraph> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, gen_random(3, 60, static_cast<std::uint64_t>(m), 7)).first;
  return it->second;
}

void BM_ExactCount(benchmark::State& state) {
  const Hypergraph& h = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_simplices_exact(h, CountMethod::kEdgeDriven).t_k);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactCount)->RangeMultiplier(10)->Range(100, 10000)->Complexity();

void BM_BasicTrial(benchmark::State& state, Algorithm a) {
  const Hypergraph& h = instance(state.range(0));
  const EdgeStream s = open_stream(h);
  const SimplexStats st = count_simplices_exact(h);
  EstimatorConfig c;
  c.k = 3;
  c.T = std::max<double>(1.0, static_cast<double>(st.t_k));
  c.epsilon = 0.5;
  c.delta_e = std::max<double>(1.0, static_cast<double>(st.delta_e));
  c.delta_v = std::max<double>(1.0, static_cast<double>(st.delta_v));
  std::uint64_t trial = 0, words = 0;
  for (auto _ : state) {
    const TrialResult t = run_basic(a, s, c, trial++);
    words += t.space_peak_words;
    benchmark::DoNotOptimize(t.value);
  }
  state.counters["peak_words"] = benchmark::Counter(static_cast<double>(words), benchmark::Counter::kAvgIterations);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.m()));
}
BENCHMARK_CAPTURE(BM_BasicTrial, abundant, Algorithm::kAbundant)->RangeMultiplier(10)->Range(100, 10000);
BENCHMARK_CAPTURE(BM_BasicTrial, easy, Algorithm::kEasy)->RangeMultiplier(10)->Range(100, 10000);
BENCHMARK_CAPTURE(BM_BasicTrial, simplest, Algorithm::kSimplest)->RangeMultiplier(10)->Range(100, 10000);
BENCHMARK_CAPTURE(BM_BasicTrial, coloring, Algorithm::kColoring)->RangeMultiplier(10)->Range(100, 10000);
BENCHMARK_CAPTURE(BM_BasicTrial, shadow, Algorithm::kShadow)->RangeMultiplier(10)->Range(100, 10000);
BENCHMARK_CAPTURE(BM_BasicTrial, onepass, Algorithm::kOnePass)->RangeMultiplier(10)->Range(100, 10000);

}  // namespace

BENCHMARK_MAIN();

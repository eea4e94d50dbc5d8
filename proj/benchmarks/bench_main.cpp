#include <benchmark/benchmark.h>

#include "packdom/constructor.hpp"
#include "packdom/generators.hpp"
#include "packdom/orientation.hpp"
#include "packdom/packing.hpp"
#include "packdom/search.hpp"

using namespace packdom;

static void BM_Construct(benchmark::State& state) {
  Graph g = random_subcubic(static_cast<std::size_t>(state.range(0)), 42);
  auto s = greedy_maximal_packing(g, 42);
  for (auto _ : state) benchmark::DoNotOptimize(construct(g, s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Construct)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_IdomOracle(benchmark::State& state) {
  Graph g = random_subcubic(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(idom_number_bruteforce(g));
}
BENCHMARK(BM_IdomOracle)->DenseRange(8, 20, 4);

static void BM_PackingOracle(benchmark::State& state) {
  Graph g = random_subcubic(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(packing_number_bruteforce(g));
}
BENCHMARK(BM_PackingOracle)->DenseRange(8, 20, 4);

static void BM_OrientNoSources(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_multigraph_min2(n, n + n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(orient_no_sources(m));
}
BENCHMARK(BM_OrientNoSources)->RangeMultiplier(4)->Range(16, 4096);

static void BM_Tight3Search(benchmark::State& state) {
  SearchOptions opt;
  opt.max_n = static_cast<std::size_t>(state.range(0));
  enumerate_connected_subcubic(opt.max_n);
  for (auto _ : state) benchmark::DoNotOptimize(run_search(opt));
}
BENCHMARK(BM_Tight3Search)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "zdrlab/dimsolver.hpp"
#include "zdrlab/families.hpp"
#include "zdrlab/graph.hpp"
#include "zdrlab/ring.hpp"
#include "zdrlab/verify.hpp"

namespace {

using namespace zdrlab;

void BM_BuildRing(benchmark::State& state, const char* spec) {
  for (auto _ : state) benchmark::DoNotOptimize(build_ring(spec));
}
BENCHMARK_CAPTURE(BM_BuildRing, Zn_200, "Zn:200");
BENCHMARK_CAPTURE(BM_BuildRing, Zni_21, "Zni:21");
BENCHMARK_CAPTURE(BM_BuildRing, GF_121, "GF:121");

void BM_ZeroDivisorGraph(benchmark::State& state, const char* spec) {
  FiniteRing ring = build_ring(spec);
  for (auto _ : state) benchmark::DoNotOptimize(build_zdgraph(ring));
}
BENCHMARK_CAPTURE(BM_ZeroDivisorGraph, Zn_200, "Zn:200");
BENCHMARK_CAPTURE(BM_ZeroDivisorGraph, Zni_21, "Zni:21");

void BM_DominantMetricDimension(benchmark::State& state, const char* spec) {
  Graph g = build_zdgraph(build_ring(spec));
  for (auto _ : state) benchmark::DoNotOptimize(dominant_metric_dimension(g));
}
BENCHMARK_CAPTURE(BM_DominantMetricDimension, K8_48, "Zni:21");
BENCHMARK_CAPTURE(BM_DominantMetricDimension, Zn_36, "Zn:36");
BENCHMARK_CAPTURE(BM_DominantMetricDimension, Zn_60, "Zn:60");

void BM_PathDominantMetricDimension(benchmark::State& state) {
  Graph g = generate_family(FamilyId::path(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dominant_metric_dimension(g));
}
BENCHMARK(BM_PathDominantMetricDimension)->Arg(8)->Arg(12)->Arg(16);

void BM_RandomGraphDimensions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::bernoulli_distribution extra(0.2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (extra(rng)) edges.emplace_back(u, v);
  Graph g(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dimensions(g));
}
BENCHMARK(BM_RandomGraphDimensions)->Arg(9)->Arg(14)->Arg(18);

void BM_FullVerify(benchmark::State& state) {
  VerifyConfig config = default_verify_config();
  config.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_verify(config));
}
BENCHMARK(BM_FullVerify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

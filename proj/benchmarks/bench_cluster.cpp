#include <benchmark/benchmark.h>

#include <random>

#include "mrgsum/secluster.hpp"
#include "support/test_support.hpp"

using namespace mrgsum;
using namespace mrgsum::testsupport;

namespace {

// Planted-community graph: `communities` cliques of size `size`, weak
// random cross edges.
IntegratedGraph planted(int communities, int size, double cross_prob) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  EdgeMap edges;
  const int n = communities * size;
  for (int c = 0; c < communities; ++c) {
    const int base = c * size;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) edges[{base + i, base + j}] = 1.0;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i / size != j / size && coin(rng) < cross_prob) edges[{i, j}] = 0.1;
    }
  }
  return IntegratedGraph(n, edges);
}

}  // namespace

static void BM_cluster_planted(benchmark::State& state) {
  const int communities = static_cast<int>(state.range(0));
  const auto graph = planted(communities, 10, 0.02);
  ClusteringConfig config;
  for (auto _ : state) {
    auto partition = cluster(graph, config);
    benchmark::DoNotOptimize(partition);
  }
  state.counters["nodes"] = static_cast<double>(graph.node_count());
}
BENCHMARK(BM_cluster_planted)->Arg(4)->Arg(10)->Arg(20);

static void BM_greedy_pass_singletons(benchmark::State& state) {
  std::mt19937_64 rng(777);
  const int n = static_cast<int>(state.range(0));
  const auto graph = random_graph(rng, n, 0.2);
  std::vector<std::vector<NodeId>> singles;
  for (NodeId v = 0; v < n; ++v) singles.push_back({v});
  for (auto _ : state) {
    auto batch = ClusterBatch::build(graph, singles);
    auto partition = greedy_pass(batch, SeMode::AsPrinted);
    benchmark::DoNotOptimize(partition);
  }
}
BENCHMARK(BM_greedy_pass_singletons)->Arg(32)->Arg(64)->Arg(128);

static void BM_brute_force_oracle(benchmark::State& state) {
  std::mt19937_64 rng(99);
  const int n = static_cast<int>(state.range(0));
  const auto graph = random_graph(rng, n, 0.5);
  for (auto _ : state) {
    auto result = brute_force_optimal(graph, SeMode::AsPrinted);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_brute_force_oracle)->Arg(6)->Arg(8);

BENCHMARK_MAIN();

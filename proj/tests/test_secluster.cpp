#include <algorithm>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "mrgsum/secluster.hpp"
#include "support/test_support.hpp"

using namespace mrgsum;
using namespace mrgsum::testsupport;

namespace {

constexpr double kK3OneCluster = 1.5849625007211562;

double singletons_se(const IntegratedGraph& g, SeMode mode = SeMode::AsPrinted) {
  return partition_se(g, Partition::singletons(g.node_count()), mode);
}

double one_cluster_se(const IntegratedGraph& g, SeMode mode = SeMode::AsPrinted) {
  Partition p;
  p.clusters.emplace_back();
  for (NodeId v = 0; v < g.node_count(); ++v) p.clusters.front().push_back(v);
  return partition_se(g, p, mode);
}

}  // namespace

TEST_CASE("greedy pass collapses k3 into one cluster") {
  const auto graph = k3();
  std::vector<std::vector<NodeId>> singles{{0}, {1}, {2}};
  const auto batch = ClusterBatch::build(graph, singles);
  const Partition result = greedy_pass(batch, SeMode::AsPrinted);
  REQUIRE(result.clusters.size() == 1);
  CHECK(result.clusters.front() == std::vector<NodeId>{0, 1, 2});
  CHECK(partition_se(graph, result, SeMode::AsPrinted) ==
        doctest::Approx(kK3OneCluster).epsilon(1e-9));
}

TEST_CASE("cluster() on k3 yields the single cluster at any batch size") {
  const auto graph = k3();
  for (int n : {2, 64}) {
    ClusteringConfig config;
    config.batch_size = n;
    const Partition p = cluster(graph, config);
    REQUIRE(p.clusters.size() == 1);
    CHECK(p.clusters.front() == std::vector<NodeId>{0, 1, 2});
  }
}

TEST_CASE("edgeless graph stays all singletons") {
  const auto graph = make_graph(5, {});
  const Partition p = cluster(graph, {});
  CHECK(p.clusters.size() == 5);
  for (NodeId v = 0; v < 5; ++v) CHECK(p.clusters[static_cast<std::size_t>(v)] ==
                                       std::vector<NodeId>{v});
}

TEST_CASE("empty graph gives the empty partition") {
  const auto graph = make_graph(0, {});
  CHECK(cluster(graph, {}).clusters.empty());
}

TEST_CASE("two disjoint 4-cliques are recovered exactly in canonical mode") {
  const auto graph = two_cliques(4);
  const Partition expected{{{0, 1, 2, 3}, {4, 5, 6, 7}}};
  ClusteringConfig config;
  config.mode = SeMode::Canonical;

  const Partition greedy = cluster(graph, config);
  CHECK(greedy == expected);

  const auto [optimal, opt_se] = brute_force_optimal(graph, SeMode::Canonical);
  CHECK(optimal == expected);
  CHECK(partition_se(graph, greedy, SeMode::Canonical) == doctest::Approx(opt_se).epsilon(1e-9));
}

TEST_CASE("as-printed entropy is blind to zero-cut splits") {
  // With leaf terms normalized by the root volume, the leaf sum is the same
  // for every partition, so any zero-cut partition is optimal and the
  // fewer-clusters tie-break selects the single cluster. Greedy still stops
  // at the planted pair because merging two zero-cut clusters gains nothing.
  const auto graph = two_cliques(4);
  const Partition planted{{{0, 1, 2, 3}, {4, 5, 6, 7}}};
  CHECK(cluster(graph, {}) == planted);

  const auto [optimal, opt_se] = brute_force_optimal(graph, SeMode::AsPrinted);
  CHECK(optimal.clusters.size() == 1);
  CHECK(partition_se(graph, planted, SeMode::AsPrinted) ==
        doctest::Approx(opt_se).epsilon(1e-9));
}

TEST_CASE("forcing small batches still recovers the planted cliques") {
  const auto graph = two_cliques(4);
  ClusteringConfig small;
  small.batch_size = 3;  // multiple batches, then doubling
  small.mode = SeMode::Canonical;
  ClusteringConfig large = small;
  large.batch_size = 64;
  const Partition expected{{{0, 1, 2, 3}, {4, 5, 6, 7}}};
  CHECK(cluster(graph, small) == expected);
  CHECK(cluster(graph, large) == expected);
}

TEST_CASE("a weak bridge does not glue two 5-cliques in canonical mode") {
  const auto graph = two_cliques(5, 0.05);
  const Partition expected{{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}};
  ClusteringConfig config;
  config.mode = SeMode::Canonical;
  CHECK(cluster(graph, config) == expected);
  const auto [optimal, _] = brute_force_optimal(graph, SeMode::Canonical);
  CHECK(optimal == expected);
}

TEST_CASE("single-cluster batch passes through unchanged") {
  const auto graph = k3();
  std::vector<std::vector<NodeId>> one{{0, 1, 2}};
  const auto batch = ClusterBatch::build(graph, one);
  const Partition p = greedy_pass(batch, SeMode::AsPrinted);
  REQUIRE(p.clusters.size() == 1);
  CHECK(p.clusters.front() == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("merges only ever lower the structural entropy") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 16);
    const auto graph = random_graph(rng, n, 0.35);
    const Partition result = cluster(graph, {});
    const double final_se = partition_se(graph, result, SeMode::AsPrinted);
    CHECK(final_se <= singletons_se(graph) + 1e-9);
  }
}

TEST_CASE("greedy result is sound against the exhaustive oracle") {
  std::mt19937_64 rng(60601);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // up to 6 nodes
    const auto graph = random_graph(rng, n, 0.5);
    const auto [optimal, opt_se] = brute_force_optimal(graph, SeMode::AsPrinted);
    const Partition greedy = cluster(graph, {});
    const double greedy_se = partition_se(graph, greedy, SeMode::AsPrinted);
    CHECK(greedy_se >= opt_se - 1e-9);
    CHECK(greedy_se <= std::min(singletons_se(graph), one_cluster_se(graph)) + 1e-9);
  }
}

TEST_CASE("brute force handles the boundary cases") {
  const auto single = make_graph(1, {});
  const auto [p1, se1] = brute_force_optimal(single, SeMode::AsPrinted);
  CHECK(p1.clusters == std::vector<std::vector<NodeId>>{{0}});
  CHECK(se1 == 0.0);

  const auto [pk3, sek3] = brute_force_optimal(k3(), SeMode::AsPrinted);
  CHECK(pk3.clusters == std::vector<std::vector<NodeId>>{{0, 1, 2}});
  CHECK(sek3 == doctest::Approx(kK3OneCluster).epsilon(1e-9));

  const auto edgeless = make_graph(3, {});
  const auto [pe, see] = brute_force_optimal(edgeless, SeMode::AsPrinted);
  CHECK(see == 0.0);
  // Zero-volume graphs take the conventional singleton answer.
  CHECK(pe == Partition::singletons(3));

  CHECK_THROWS_AS(brute_force_optimal(make_graph(11, {}), SeMode::AsPrinted),
                  std::invalid_argument);
}

TEST_CASE("clustering is deterministic across repeated runs") {
  std::mt19937_64 rng(888);
  const auto graph = random_graph(rng, 30, 0.3);
  ClusteringConfig config;
  config.batch_size = 8;
  const Partition a = cluster(graph, config);
  const Partition b = cluster(graph, config);
  CHECK(a == b);
}

TEST_CASE("cluster count emerges from the objective, not from configuration") {
  // Same config, different structure: the output count follows the graph.
  ClusteringConfig config;
  const auto one = cluster(k3(), config);
  const auto two = cluster(two_cliques(4), config);
  const auto five = cluster(make_graph(5, {}), config);
  CHECK(one.clusters.size() == 1);
  CHECK(two.clusters.size() == 2);
  CHECK(five.clusters.size() == 5);
}

TEST_CASE("batched runs with n >= node count equal the unbatched greedy pass") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 20);
    const auto graph = random_graph(rng, n, 0.3);

    std::vector<std::vector<NodeId>> singles;
    for (NodeId v = 0; v < n; ++v) singles.push_back({v});
    const auto batch = ClusterBatch::build(graph, singles);
    const Partition unbatched = greedy_pass(batch, SeMode::AsPrinted);

    ClusteringConfig config;
    config.batch_size = n + 5;
    CHECK(cluster(graph, config) == unbatched);
  }
}

namespace {

// Reference pass: re-enumerates the height-1 nodes from the tree on every
// iteration and recomputes pair weights from the graph, instead of
// maintaining them incrementally.
Partition reference_greedy(const ClusterBatch& batch, SeMode mode) {
  Partition seed;
  seed.clusters = batch.members;
  EncodingTree tree(batch.view, seed, mode);
  while (true) {
    const auto h1 = tree.height1();
    double best_delta = 0.0;
    int best_a = -1;
    int best_b = -1;
    std::pair<int, int> best_key{-1, -1};
    for (std::size_t i = 0; i < h1.size(); ++i) {
      for (std::size_t j = i + 1; j < h1.size(); ++j) {
        const double delta = tree.delta_se(h1[i], h1[j]);
        if (delta >= -1e-12) continue;
        const std::pair<int, int> key{
            std::min(tree.min_vertex(h1[i]), tree.min_vertex(h1[j])),
            std::max(tree.min_vertex(h1[i]), tree.min_vertex(h1[j]))};
        if (best_a < 0 || delta < best_delta || (delta == best_delta && key < best_key)) {
          best_delta = delta;
          best_a = h1[i];
          best_b = h1[j];
          best_key = key;
        }
      }
    }
    if (best_a < 0) break;
    tree.merge(best_a, best_b);
  }
  return tree.partition();
}

}  // namespace

TEST_CASE("incremental pair-weight bookkeeping matches the recomputing reference") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 15);
    const auto graph = random_graph(rng, n, 0.4);
    std::vector<std::vector<NodeId>> singles;
    for (NodeId v = 0; v < n; ++v) singles.push_back({v});
    const auto batch = ClusterBatch::build(graph, singles);
    for (SeMode mode : {SeMode::AsPrinted, SeMode::Canonical}) {
      CHECK(greedy_pass(batch, mode) == reference_greedy(batch, mode));
    }
  }
}

TEST_CASE("shuffle seed changes batching but keeps a valid partition") {
  std::mt19937_64 rng(5150);
  const auto graph = random_graph(rng, 24, 0.3);
  ClusteringConfig config;
  config.batch_size = 4;
  config.shuffle_seed = 17;
  const Partition p = cluster(graph, config);
  std::vector<bool> seen(24, false);
  for (const auto& c : p.clusters) {
    for (NodeId v : c) {
      CHECK(!seen[static_cast<std::size_t>(v)]);
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
}

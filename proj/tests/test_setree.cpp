#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "mrgsum/setree.hpp"
#include "support/test_support.hpp"

using namespace mrgsum;
using namespace mrgsum::testsupport;

namespace {

// Frozen values for the unweighted triangle, evaluated by hand from the
// definitions with log base 2:
//   d_i = 2, vol = 6
//   leaf term        -(1/3)log2(1/3)   = 0.5283208335737187
//   singleton SE     2 * leaf term     = 1.0566416671474375
//   all-singletons   3 * singleton SE  = 3.1699250014423126
//   single cluster   log2(3)           = 1.5849625007211562
constexpr double kK3LeafTerm = 0.5283208335737187;
constexpr double kK3SingletonSe = 1.0566416671474375;
constexpr double kK3AllSingletons = 3.1699250014423126;
constexpr double kK3OneCluster = 1.5849625007211562;

EncodingTree singleton_tree(const IntegratedGraph& graph, const SubgraphView& view,
                            SeMode mode = SeMode::AsPrinted) {
  (void)graph;
  return EncodingTree::singletons(view, mode);
}

}  // namespace

TEST_CASE("k3 leaf entropy matches the hand-computed values") {
  const auto graph = k3();
  const auto view = SubgraphView::whole(graph);

  Partition one;
  one.clusters = {{0, 1, 2}};
  EncodingTree whole_tree(view, one, SeMode::AsPrinted);
  const int alpha = whole_tree.height1().front();
  CHECK(whole_tree.leaf_entropy(alpha) == doctest::Approx(kK3OneCluster).epsilon(1e-12));
  CHECK(whole_tree.node_se(alpha) == doctest::Approx(kK3OneCluster).epsilon(1e-12));

  auto singles = singleton_tree(graph, view);
  const int first = singles.height1().front();
  CHECK(singles.leaf_entropy(first) == doctest::Approx(kK3LeafTerm).epsilon(1e-12));
  CHECK(singles.node_se(first) == doctest::Approx(kK3SingletonSe).epsilon(1e-12));
}

TEST_CASE("k3 tree entropies and merge delta") {
  const auto graph = k3();
  const auto view = SubgraphView::whole(graph);
  auto tree = singleton_tree(graph, view);
  CHECK(tree.tree_se() == doctest::Approx(kK3AllSingletons).epsilon(1e-12));

  const auto h1 = tree.height1();
  const double delta = tree.delta_se(h1[0], h1[1]);
  CHECK(delta < 0.0);

  // Oracle: fresh trees before and after the hypothetical merge.
  Partition before = Partition::singletons(3);
  Partition after;
  after.clusters = {{0, 1}, {2}};
  const double recomputed = EncodingTree(view, after, SeMode::AsPrinted).tree_se() -
                            EncodingTree(view, before, SeMode::AsPrinted).tree_se();
  CHECK(delta == doctest::Approx(recomputed).epsilon(1e-12));

  const int merged = tree.merge(h1[0], h1[1]);
  CHECK(tree.cluster_count() == 2);
  CHECK(tree.vertex_set(merged) == std::vector<NodeId>{0, 1});
  CHECK(tree.tree_se() == doctest::Approx(kK3AllSingletons + delta).epsilon(1e-9));

  Partition full;
  full.clusters = {{0, 1, 2}};
  EncodingTree one(view, full, SeMode::AsPrinted);
  CHECK(one.tree_se() == doctest::Approx(kK3OneCluster).epsilon(1e-12));
}

TEST_CASE("isolated vertices contribute zero and never help a merge") {
  // Path 0-1 plus isolated vertex 2.
  const auto graph = make_graph(3, {{{0, 1}, 1.0}});
  const auto view = SubgraphView::whole(graph);
  auto tree = EncodingTree::singletons(view, SeMode::AsPrinted);
  const auto h1 = tree.height1();
  CHECK(tree.leaf_entropy(h1[2]) == 0.0);
  CHECK(tree.node_se(h1[2]) == 0.0);
  // Merging the isolated vertex with anything changes nothing.
  CHECK(tree.delta_se(h1[0], h1[2]) == doctest::Approx(0.0));
}

TEST_CASE("edgeless graph reports zero volume and zero entropy") {
  const auto graph = make_graph(4, {});
  const auto view = SubgraphView::whole(graph);
  auto tree = EncodingTree::singletons(view, SeMode::AsPrinted);
  CHECK(tree.zero_volume());
  CHECK(tree.tree_se() == 0.0);
  CHECK(tree.leaf_entropy(tree.height1().front()) == 0.0);
}

TEST_CASE("delta_se rejects identical operands") {
  const auto graph = k3();
  const auto view = SubgraphView::whole(graph);
  auto tree = EncodingTree::singletons(view, SeMode::AsPrinted);
  const auto h1 = tree.height1();
  CHECK_THROWS_AS((void)tree.delta_se(h1[0], h1[0]), std::invalid_argument);
  CHECK_THROWS_AS((void)tree.merge(h1[0], h1[0]), std::invalid_argument);
}

TEST_CASE("delta_se equals fresh-tree recomputation on random graphs, both modes") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const auto graph = random_graph(rng, n, 0.4);
    const auto view = SubgraphView::whole(graph);
    const Partition seed = random_partition(rng, n);
    if (seed.clusters.size() < 2) continue;
    for (SeMode mode : {SeMode::AsPrinted, SeMode::Canonical}) {
      EncodingTree tree(view, seed, mode);
      const double base = tree.tree_se();
      const auto h1 = tree.height1();
      for (std::size_t i = 0; i < h1.size(); ++i) {
        for (std::size_t j = i + 1; j < h1.size(); ++j) {
          const double delta = tree.delta_se(h1[i], h1[j]);
          Partition merged = seed;
          auto& a = merged.clusters[i];
          const auto& b = merged.clusters[j];
          a.insert(a.end(), b.begin(), b.end());
          merged.clusters.erase(merged.clusters.begin() + static_cast<long>(j));
          merged.canonicalize();
          const double recomputed = EncodingTree(view, merged, mode).tree_se() - base;
          CHECK(std::abs(delta - recomputed) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("merge keeps cached volume and cut coherent") {
  SUBCASE("integer weights stay exact") {
    const auto graph = two_cliques(4);
    const auto view = SubgraphView::whole(graph);
    auto tree = EncodingTree::singletons(view, SeMode::AsPrinted);
    std::mt19937_64 rng(7);
    while (tree.cluster_count() > 1) {
      auto h1 = tree.height1();
      const int a = h1[rng() % h1.size()];
      int b = a;
      while (b == a) b = h1[rng() % h1.size()];
      tree.merge(a, b);
      for (int node : tree.height1()) {
        CHECK(tree.volume(node) == tree.recompute_volume(node));
        CHECK(tree.cut(node) == tree.recompute_cut(node));
      }
    }
  }
  SUBCASE("real weights stay within 1e-9") {
    std::mt19937_64 rng(99);
    const auto graph = random_graph(rng, 14, 0.5);
    const auto view = SubgraphView::whole(graph);
    auto tree = EncodingTree::singletons(view, SeMode::AsPrinted);
    while (tree.cluster_count() > 1) {
      auto h1 = tree.height1();
      const int a = h1[rng() % h1.size()];
      int b = a;
      while (b == a) b = h1[rng() % h1.size()];
      tree.merge(a, b);
    }
    for (int node : tree.height1()) {
      CHECK(tree.volume(node) == doctest::Approx(tree.recompute_volume(node)).epsilon(1e-9));
      CHECK(tree.cut(node) == doctest::Approx(tree.recompute_cut(node)).epsilon(1e-9));
    }
  }
}

TEST_CASE("partition invariant holds through merges") {
  std::mt19937_64 rng(123);
  const auto graph = random_graph(rng, 10, 0.5);
  const auto view = SubgraphView::whole(graph);
  auto tree = EncodingTree::singletons(view, SeMode::AsPrinted);
  while (tree.cluster_count() > 2) {
    auto h1 = tree.height1();
    tree.merge(h1[0], h1[1]);
    std::vector<bool> seen(10, false);
    for (int node : tree.height1()) {
      for (NodeId v : tree.vertex_set(node)) {
        CHECK(!seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
  }
}

TEST_CASE("uniform edge scaling leaves every entropy value unchanged") {
  std::mt19937_64 rng(4242);
  EdgeMap edges;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      if (rng() % 2 == 0) edges[{i, j}] = 0.1 + 0.9 * (static_cast<double>(rng() % 100) / 100.0);
    }
  }
  EdgeMap scaled;
  for (const auto& [k, w] : edges) scaled[k] = w * 7.5;
  const auto g1 = make_graph(8, edges);
  const auto g2 = make_graph(8, scaled);
  const auto v1 = SubgraphView::whole(g1);
  const auto v2 = SubgraphView::whole(g2);
  Partition seed;
  seed.clusters = {{0, 1, 2}, {3, 4}, {5}, {6, 7}};
  for (SeMode mode : {SeMode::AsPrinted, SeMode::Canonical}) {
    EncodingTree t1(v1, seed, mode);
    EncodingTree t2(v2, seed, mode);
    CHECK(t1.tree_se() == doctest::Approx(t2.tree_se()).epsilon(1e-9));
    const auto h1a = t1.height1();
    const auto h1b = t2.height1();
    for (std::size_t i = 0; i < h1a.size(); ++i) {
      CHECK(t1.node_se(h1a[i]) == doctest::Approx(t2.node_se(h1b[i])).epsilon(1e-9));
      CHECK(t1.leaf_entropy(h1a[i]) == doctest::Approx(t2.leaf_entropy(h1b[i])).epsilon(1e-9));
    }
    CHECK(t1.delta_se(h1a[0], h1a[1]) ==
          doctest::Approx(t2.delta_se(h1b[0], h1b[1])).epsilon(1e-9));
  }
}

TEST_CASE("canonical mode zeroes singleton leaf entropy") {
  const auto graph = k3();
  const auto view = SubgraphView::whole(graph);
  auto tree = EncodingTree::singletons(view, SeMode::Canonical);
  for (int node : tree.height1()) {
    CHECK(tree.leaf_entropy(node) == doctest::Approx(0.0));
  }
}

TEST_CASE("subgraph views carry boundary mass into degrees and cuts") {
  // Path 0-1-2 with unit weights; view = {0, 1}.
  const auto graph = make_graph(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}});
  const std::vector<NodeId> verts{0, 1};
  const auto view = SubgraphView::induced(graph, verts);
  CHECK(view.degree[0] == 1.0);
  CHECK(view.degree[1] == 2.0);  // full-graph degree, boundary included
  CHECK(view.external[0] == 0.0);
  CHECK(view.external[1] == 1.0);
  CHECK(view.volume == 3.0);

  auto tree = EncodingTree::singletons(view, SeMode::AsPrinted);
  const auto h1 = tree.height1();
  CHECK(tree.cut(h1[1]) == 2.0);  // one internal cut edge plus the boundary edge
  const int merged = tree.merge(h1[0], h1[1]);
  CHECK(tree.cut(merged) == 1.0);  // only the boundary edge remains cut
  CHECK(tree.volume(merged) == 3.0);
}

TEST_CASE("whole-view root has zero cut and full volume") {
  const auto graph = two_cliques(3);
  const auto view = SubgraphView::whole(graph);
  auto tree = EncodingTree::singletons(view, SeMode::AsPrinted);
  CHECK(tree.cut(tree.root()) == 0.0);
  CHECK(tree.volume(tree.root()) == graph.total_volume());
  CHECK(tree.recompute_cut(tree.root()) == 0.0);
}

TEST_CASE("partition serialization round-trips") {
  Partition p;
  p.clusters = {{2, 0}, {1, 3}};
  p.canonicalize();
  CHECK(p.clusters == std::vector<std::vector<NodeId>>{{0, 2}, {1, 3}});
  const auto back = Partition::from_json(p.to_json());
  CHECK(back == p);
  CHECK(p.to_labels(4) == "0\n1\n0\n1\n");
}

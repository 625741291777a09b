#include "mrgsum/secluster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace mrgsum {
namespace {

// Deltas this close to zero are treated as "no improvement" so float noise
// cannot trigger merges of analytically neutral pairs.
constexpr double kMergeEps = 1e-12;

struct PairKey {
  int lo;
  int hi;
  bool operator<(const PairKey& o) const { return lo != o.lo ? lo < o.lo : hi < o.hi; }
};

PairKey tie_key(const EncodingTree& tree, int a, int b) {
  const int ma = tree.min_vertex(a);
  const int mb = tree.min_vertex(b);
  return {std::min(ma, mb), std::max(ma, mb)};
}

}  // namespace

ClusterBatch ClusterBatch::build(const IntegratedGraph& graph,
                                 std::span<const std::vector<NodeId>> members) {
  ClusterBatch batch;
  std::vector<NodeId> verts;
  for (const auto& m : members) {
    batch.members.push_back(m);
    verts.insert(verts.end(), m.begin(), m.end());
  }
  batch.view = SubgraphView::induced(graph, verts);
  return batch;
}

Partition greedy_pass(const ClusterBatch& batch, SeMode mode) {
  Partition seed;
  seed.clusters = batch.members;
  EncodingTree tree(batch.view, seed, mode);

  std::vector<int> active = tree.height1();
  // Inter-cluster weights, maintained incrementally across merges.
  std::map<PairKey, double> pairw;
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      const double w = tree.pair_weight(active[i], active[j]);
      if (w > 0.0) pairw[{std::min(active[i], active[j]), std::max(active[i], active[j])}] = w;
    }
  }
  auto weight_of = [&](int a, int b) {
    auto it = pairw.find({std::min(a, b), std::max(a, b)});
    return it == pairw.end() ? 0.0 : it->second;
  };

  while (active.size() > 1) {
    double best_delta = 0.0;
    int best_a = -1;
    int best_b = -1;
    PairKey best_key{-1, -1};
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const int a = active[i];
        const int b = active[j];
        const double delta = tree.delta_se(a, b, weight_of(a, b));
        if (delta >= -kMergeEps) continue;
        const PairKey key = tie_key(tree, a, b);
        if (best_a < 0 || delta < best_delta ||
            (delta == best_delta && key < best_key)) {
          best_delta = delta;
          best_a = a;
          best_b = b;
          best_key = key;
        }
      }
    }
    if (best_a < 0) break;  // no negative delta left

    const double w_ab = weight_of(best_a, best_b);
    const int merged = tree.merge(best_a, best_b, w_ab);
    for (int other : active) {
      if (other == best_a || other == best_b) continue;
      const double w = weight_of(best_a, other) + weight_of(best_b, other);
      pairw.erase({std::min(best_a, other), std::max(best_a, other)});
      pairw.erase({std::min(best_b, other), std::max(best_b, other)});
      if (w > 0.0) pairw[{std::min(merged, other), std::max(merged, other)}] = w;
    }
    pairw.erase({std::min(best_a, best_b), std::max(best_a, best_b)});
    std::erase_if(active, [&](int id) { return id == best_a || id == best_b; });
    active.push_back(merged);
    std::sort(active.begin(), active.end(),
              [&](int x, int y) { return tree.min_vertex(x) < tree.min_vertex(y); });
  }
  return tree.partition();
}

Partition cluster(const IntegratedGraph& graph, const ClusteringConfig& config) {
  Partition result;
  const int n_vertices = graph.node_count();
  if (n_vertices == 0) return result;

  std::vector<std::vector<NodeId>> current;
  current.reserve(static_cast<std::size_t>(n_vertices));
  for (NodeId v = 0; v < n_vertices; ++v) current.push_back({v});

  long batch_size = std::max(2, config.batch_size);
  for (int iter = 0; iter < config.max_outer_iterations; ++iter) {
    const std::size_t group_size =
        std::min<std::size_t>(static_cast<std::size_t>(batch_size), current.size());
    std::vector<std::vector<NodeId>> next;
    bool single_batch = current.size() <= group_size;
    for (std::size_t begin = 0; begin < current.size(); begin += group_size) {
      const std::size_t end = std::min(begin + group_size, current.size());
      std::span<const std::vector<NodeId>> members(current.data() + begin, end - begin);
      if (members.size() == 1) {
        next.push_back(members[0]);  // nothing to merge with
        continue;
      }
      ClusterBatch batch = ClusterBatch::build(graph, members);
      Partition merged = greedy_pass(batch, config.mode);
      for (auto& c : merged.clusters) next.push_back(std::move(c));
    }
    const bool changed = next.size() != current.size();
    current = std::move(next);
    if (single_batch) break;
    if (!changed) batch_size = std::min<long>(batch_size * 2, 1L << 30);
    if (config.shuffle_seed) {
      std::mt19937_64 rng(*config.shuffle_seed + static_cast<std::uint64_t>(iter));
      std::shuffle(current.begin(), current.end(), rng);
    }
  }

  result.clusters = std::move(current);
  result.canonicalize();
  return result;
}

namespace {

// Direct per-partition SE evaluation from the definition; kept independent
// of the EncodingTree caches on purpose.
double direct_partition_se(const IntegratedGraph& graph,
                           const std::vector<std::vector<NodeId>>& clusters, SeMode mode) {
  const double vol = graph.total_volume();
  if (vol <= 0.0) return 0.0;
  double total = 0.0;
  for (const auto& members : clusters) {
    double vol_a = 0.0;
    for (NodeId v : members) vol_a += graph.degree(v);
    double internal = 0.0;
    for (NodeId v : members) {
      for (const auto& [u, w] : graph.neighbors(v)) {
        if (std::find(members.begin(), members.end(), u) != members.end()) internal += w;
      }
    }
    const double cut = vol_a - internal;  // internal counted from both ends
    double se = 0.0;
    if (vol_a > 0.0) se -= (cut / vol) * std::log2(vol_a / vol);
    for (NodeId v : members) {
      const double d = graph.degree(v);
      if (d <= 0.0) continue;
      const double denom = mode == SeMode::AsPrinted ? vol : vol_a;
      se -= (d / vol) * std::log2(d / denom);
    }
    total += se;
  }
  return total;
}

}  // namespace

double partition_se(const IntegratedGraph& graph, const Partition& partition, SeMode mode) {
  SubgraphView view = SubgraphView::whole(graph);
  EncodingTree tree(view, partition, mode);
  return tree.tree_se();
}

std::pair<Partition, double> brute_force_optimal(const IntegratedGraph& graph, SeMode mode) {
  const int n = graph.node_count();
  if (n > kBruteForceNodeCap) {
    throw std::invalid_argument("brute_force_optimal: graph has " + std::to_string(n) +
                                " nodes, cap is " + std::to_string(kBruteForceNodeCap));
  }
  if (n == 0) return {Partition{}, 0.0};
  if (graph.total_volume() <= 0.0) {
    // Every partition of an edgeless graph scores zero; singletons are the
    // conventional degenerate answer.
    return {Partition::singletons(n), 0.0};
  }

  std::vector<std::vector<NodeId>> assignment;
  Partition best;
  double best_se = 0.0;
  bool have_best = false;

  auto consider = [&]() {
    const double se = direct_partition_se(graph, assignment, mode);
    Partition candidate;
    candidate.clusters = assignment;
    candidate.canonicalize();
    if (!have_best || se < best_se - 1e-12) {
      best = std::move(candidate);
      best_se = se;
      have_best = true;
      return;
    }
    if (se <= best_se + 1e-12) {  // tie: fewer clusters, then lexicographic
      if (candidate.clusters.size() < best.clusters.size() ||
          (candidate.clusters.size() == best.clusters.size() &&
           candidate.clusters < best.clusters)) {
        best = std::move(candidate);
        best_se = std::min(best_se, se);
      }
    }
  };

  // Enumerate set partitions: vertex v joins an existing block or opens one.
  // Indexed loop: deeper calls grow `assignment` and would invalidate
  // iterators into it.
  assignment.reserve(static_cast<std::size_t>(n));
  auto recurse = [&](auto&& self, NodeId v) -> void {
    if (v == n) {
      consider();
      return;
    }
    const std::size_t blocks = assignment.size();
    for (std::size_t b = 0; b < blocks; ++b) {
      assignment[b].push_back(v);
      self(self, v + 1);
      assignment[b].pop_back();
    }
    assignment.push_back({v});
    self(self, v + 1);
    assignment.pop_back();
  };
  recurse(recurse, 0);
  return {best, best_se};
}

}  // namespace mrgsum

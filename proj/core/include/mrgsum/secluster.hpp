#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "mrgsum/setree.hpp"

namespace mrgsum {

struct ClusteringConfig {
  int batch_size = 64;  // n: clusters per subgraph; doubled when a pass stalls
  int max_outer_iterations = 50;
  SeMode mode = SeMode::AsPrinted;
  // Optional reshuffle of cluster order between outer passes; default keeps
  // the stable order (clusters sorted by smallest member id).
  std::optional<std::uint64_t> shuffle_seed;
};

// One group of clusters plus the induced subgraph view. Boundary edges are
// retained in the view's external mass so cluster cuts stay correct.
struct ClusterBatch {
  std::vector<std::vector<NodeId>> members;
  SubgraphView view;

  static ClusterBatch build(const IntegratedGraph& graph,
                            std::span<const std::vector<NodeId>> members);
};

// Greedy 2D structural-entropy minimization of one batch: seeds a tree with
// one height-1 node per incoming cluster and merges the most negative
// delta-SE pair until none remains. Clusters come back sorted by smallest
// member id.
Partition greedy_pass(const ClusterBatch& batch, SeMode mode = SeMode::AsPrinted);

// Full batched clustering: start from singletons, group clusters into
// consecutive batches of size min(n, remaining), run greedy passes, rebuild
// the partition, and repeat; n doubles when a pass changes nothing, and the
// loop ends after processing a single all-covering batch.
Partition cluster(const IntegratedGraph& graph, const ClusteringConfig& config = {});

inline constexpr int kBruteForceNodeCap = 10;

// Exhaustive minimum over all set partitions (Bell-number enumeration).
// Ties prefer fewer clusters, then the lexicographically smallest canonical
// form. Throws std::invalid_argument above kBruteForceNodeCap vertices.
std::pair<Partition, double> brute_force_optimal(const IntegratedGraph& graph,
                                                 SeMode mode = SeMode::AsPrinted);

// SE of a partition evaluated by building a fresh tree over the whole graph.
double partition_se(const IntegratedGraph& graph, const Partition& partition,
                    SeMode mode = SeMode::AsPrinted);

}  // namespace mrgsum

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrgsum/compress.hpp"
#include "mrgsum/corpus.hpp"
#include "mrgsum/secluster.hpp"

namespace mrgsum {

struct PipelineConfig {
  double tau = 0.1;
  int batch_size = 64;
  int max_iters = 50;
  int c_star = 14;
  int k_paths = 32;
  int min_words = 8;
  SeMode se_mode = SeMode::AsPrinted;
  int skip_distance = 4;
  bool trace = false;
  int parallelism = 0;  // 0 = resolve from MRGSUM_THREADS, then hardware
  std::optional<std::uint64_t> shuffle_seed;

  // Deterministic one-line rendering of the fully resolved configuration.
  std::string echo() const;
};

// Outcome of the full pipeline on one document cluster.
struct ClusterRun {
  std::string id;
  std::string summary;
  Partition partition;
  std::vector<RankedCluster> ranked;  // all clusters, before truncation
  std::vector<CompressionResult> compressions;  // aligned with retained ranks
  double seconds = 0.0;
};

ClusterRun run_cluster(const DocumentCluster& cluster, const PipelineConfig& config);

// Work queue over independent clusters; results come back in input order.
std::vector<ClusterRun> run_dataset(std::span<const DocumentCluster> dataset,
                                    const PipelineConfig& config);

// One JSON line of provenance for the --trace sidecar.
std::string trace_json(const ClusterRun& run);

// Requested threads, MRGSUM_THREADS override, hardware fallback; always >= 1.
int resolve_parallelism(int requested);

}  // namespace mrgsum

#include "mrgsum/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "mrgsum/relgraph.hpp"

namespace mrgsum {

std::string PipelineConfig::echo() const {
  std::ostringstream out;
  out.precision(12);
  out << "tau=" << tau << " batch-size=" << batch_size << " max-iters=" << max_iters
      << " c-star=" << c_star << " k-paths=" << k_paths << " min-words=" << min_words
      << " se-mode=" << to_string(se_mode) << " skip-distance=" << skip_distance
      << " trace=" << (trace ? "on" : "off") << " parallelism=" << resolve_parallelism(parallelism);
  if (shuffle_seed) out << " shuffle-seed=" << *shuffle_seed;
  return out.str();
}

int resolve_parallelism(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MRGSUM_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ClusterRun run_cluster(const DocumentCluster& cluster, const PipelineConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  ClusterRun run;
  run.id = cluster.id;

  const TfidfVectors vectors = tfidf_vectors(cluster);
  const TypedEdgeSet semantic = semantic_edges(vectors, config.tau);
  const TypedEdgeSet discourse = discourse_edges(cluster);
  const IntegratedGraph graph = integrate(semantic, discourse);

  ClusteringConfig cc;
  cc.batch_size = config.batch_size;
  cc.max_outer_iterations = config.max_iters;
  cc.mode = config.se_mode;
  cc.shuffle_seed = config.shuffle_seed;
  run.partition = mrgsum::cluster(graph, cc);

  run.ranked = rank_clusters(run.partition, cluster);
  const auto retained = truncate(run.ranked, config.c_star);
  for (const auto& rc : retained) {
    run.compressions.push_back(
        compress_cluster(cluster, rc, vectors, config.k_paths, config.min_words));
  }
  for (const auto& comp : run.compressions) {
    if (comp.text.empty()) continue;
    if (!run.summary.empty()) run.summary += ' ';
    run.summary += comp.text;
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return run;
}

std::vector<ClusterRun> run_dataset(std::span<const DocumentCluster> dataset,
                                    const PipelineConfig& config) {
  std::vector<ClusterRun> results(dataset.size());
  const int workers =
      std::max(1, std::min<int>(resolve_parallelism(config.parallelism),
                                static_cast<int>(dataset.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < dataset.size(); ++i) results[i] = run_cluster(dataset[i], config);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= dataset.size()) return;
      results[i] = run_cluster(dataset[i], config);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return results;
}

std::string trace_json(const ClusterRun& run) {
  nlohmann::ordered_json obj;
  obj["id"] = run.id;
  obj["partition"] = run.partition.clusters;
  nlohmann::ordered_json ranked = nlohmann::ordered_json::array();
  for (const auto& rc : run.ranked) {
    ranked.push_back({{"rank", rc.rank}, {"score", rc.score}, {"sentences", rc.sentence_ids}});
  }
  obj["ranked"] = std::move(ranked);
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& c : run.compressions) {
    comps.push_back({{"text", c.text},
                     {"fallback", c.fallback},
                     {"path_weight", c.path_weight},
                     {"keyphrase_score", c.keyphrase_score},
                     {"final_score", c.final_score},
                     {"candidates", c.candidate_count},
                     {"candidate_scores", c.candidate_scores}});
  }
  obj["compressions"] = std::move(comps);
  obj["summary"] = run.summary;
  return obj.dump();
}

}  // namespace mrgsum

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "mrgsum/compress.hpp"
#include "mrgsum/pipeline.hpp"
#include "mrgsum/rougeval.hpp"

using namespace mrgsum;

namespace {

DocumentCluster news_cluster(int docs, int sentences_per_doc) {
  static const std::vector<std::string> subjects = {"the city council", "a rescue crew",
                                                    "the harbor patrol", "the power company"};
  static const std::vector<std::string> verbs = {"said", "reported", "found", "kept"};
  static const std::vector<std::string> objects = {"the broken bridge", "a flooded street",
                                                   "the old market", "the coastal road"};
  static const std::vector<std::string> tails = {"after the storm passed on saturday",
                                                 "while repairs continued downtown",
                                                 "as supplies arrived from the capital"};
  std::mt19937_64 rng(4321);
  std::vector<std::string> texts;
  for (int d = 0; d < docs; ++d) {
    std::string text;
    for (int s = 0; s < sentences_per_doc; ++s) {
      text += subjects[rng() % subjects.size()] + " " + verbs[rng() % verbs.size()] + " " +
              objects[rng() % objects.size()] + " " + tails[rng() % tails.size()] + ". ";
    }
    texts.push_back(text);
  }
  return make_cluster("bench", texts, {});
}

}  // namespace

static void BM_pipeline_cluster(benchmark::State& state) {
  const auto cluster = news_cluster(3, static_cast<int>(state.range(0)));
  PipelineConfig config;
  for (auto _ : state) {
    auto run = run_cluster(cluster, config);
    benchmark::DoNotOptimize(run);
  }
  state.counters["sentences"] = static_cast<double>(cluster.total_sentences());
}
BENCHMARK(BM_pipeline_cluster)->Arg(5)->Arg(10)->Arg(20);

static void BM_word_graph_compress(benchmark::State& state) {
  const auto cluster = news_cluster(2, static_cast<int>(state.range(0)));
  const auto vectors = tfidf_vectors(cluster);
  RankedCluster rc;
  for (int i = 0; i < cluster.total_sentences(); ++i) rc.sentence_ids.push_back(i);
  for (auto _ : state) {
    auto result = compress_cluster(cluster, rc, vectors, 32, 8);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_word_graph_compress)->Arg(4)->Arg(8);

static void BM_rouge_su(benchmark::State& state) {
  std::mt19937_64 rng(55);
  static const std::vector<std::string> words = {"quake", "power",  "crews",  "harbor",
                                                 "storm", "bridge", "market", "road"};
  std::string cand;
  std::string ref;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
    cand += words[rng() % words.size()] + " ";
    ref += words[rng() % words.size()] + " ";
  }
  for (auto _ : state) {
    auto score = rouge_su(cand, ref);
    benchmark::DoNotOptimize(score);
  }
}
BENCHMARK(BM_rouge_su)->Arg(100)->Arg(300);

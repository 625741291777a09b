// mrgsum: multi-document summarization by multi-relational sentence graphs,
// two-dimensional structural-entropy clustering, and position-aware
// compression. Subcommands: summarize, cluster, eval, oracle, stats.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mrgsum/errors.hpp"
#include "mrgsum/pipeline.hpp"
#include "mrgsum/rougeval.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

std::vector<mrgsum::DocumentCluster> load_dataset(const std::string& path) {
  if (std::filesystem::is_directory(path)) return mrgsum::load_directory(path);
  return mrgsum::load_jsonl(path);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mrgsum::IoError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

struct OutputFile {
  explicit OutputFile(const std::string& path) {
    if (path == "-") {
      stream = &std::cout;
      return;
    }
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw mrgsum::IoError("cannot write " + path);
    stream = file.get();
  }
  std::ostream& out() { return *stream; }
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = nullptr;
};

void add_se_mode_option(CLI::App* cmd, mrgsum::SeMode& mode) {
  cmd->add_option_function<std::string>(
         "--se-mode",
         [&mode](const std::string& v) {
           if (v == "as-printed") {
             mode = mrgsum::SeMode::AsPrinted;
           } else if (v == "canonical") {
             mode = mrgsum::SeMode::Canonical;
           } else {
             throw CLI::ValidationError("--se-mode must be as-printed or canonical");
           }
         },
         "Structural-entropy formula variant (as-printed|canonical)")
      ->default_str("as-printed");
}

int cmd_summarize(const std::string& input, const std::string& output,
                  const std::string& trace_file, const mrgsum::PipelineConfig& config) {
  const auto dataset = load_dataset(input);
  std::cerr << "config: " << config.echo() << "\n";
  if (dataset.empty()) {
    std::cerr << "warning: no clusters in " << input << "\n";
  }
  OutputFile out(output);
  std::unique_ptr<OutputFile> trace;
  if (config.trace) trace = std::make_unique<OutputFile>(trace_file);

  const auto runs = mrgsum::run_dataset(dataset, config);
  double total = 0.0;
  for (const auto& run : runs) {
    out.out() << run.summary << "\n";
    if (trace) trace->out() << mrgsum::trace_json(run) << "\n";
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << run.seconds;
    std::cerr << "cluster " << run.id << ": " << t.str() << "s\n";
    total += run.seconds;
  }
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << total;
  std::cerr << runs.size() << " clusters, " << t.str() << "s total\n";
  return kExitOk;
}

int cmd_cluster(const std::string& input, const std::string& output, bool edge_list,
                const std::string& labels_file, const std::string& dump_edges,
                const mrgsum::PipelineConfig& config) {
  mrgsum::ClusteringConfig cc;
  cc.batch_size = config.batch_size;
  cc.max_outer_iterations = config.max_iters;
  cc.mode = config.se_mode;
  cc.shuffle_seed = config.shuffle_seed;

  OutputFile out(output);
  if (edge_list) {
    std::ifstream in(input);
    if (!in) throw mrgsum::IoError("cannot open " + input);
    const auto graph = mrgsum::read_edge_list(in);
    const auto partition = mrgsum::cluster(graph, cc);
    out.out() << partition.to_json() << "\n";
    if (!labels_file.empty()) {
      OutputFile labels(labels_file);
      labels.out() << partition.to_labels(graph.node_count());
    }
    return kExitOk;
  }

  const auto dataset = load_dataset(input);
  std::cerr << "config: " << config.echo() << "\n";
  for (const auto& cluster : dataset) {
    const auto vectors = mrgsum::tfidf_vectors(cluster);
    const auto graph = mrgsum::integrate(mrgsum::semantic_edges(vectors, config.tau),
                                         mrgsum::discourse_edges(cluster));
    if (!dump_edges.empty()) {
      const std::string path = dump_edges + cluster.id + ".edges";
      std::ofstream edges_out(path);
      if (!edges_out) throw mrgsum::IoError("cannot write " + path);
      mrgsum::write_edge_list(edges_out, graph);
    }
    const auto partition = mrgsum::cluster(graph, cc);
    nlohmann::ordered_json obj;
    obj["id"] = cluster.id;
    obj["clusters"] = partition.clusters;
    out.out() << obj.dump() << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& input, mrgsum::SeMode mode) {
  std::ifstream in(input);
  if (!in) throw mrgsum::IoError("cannot open " + input);
  const auto graph = mrgsum::read_edge_list(in);
  const auto [partition, se] = mrgsum::brute_force_optimal(graph, mode);
  nlohmann::ordered_json obj;
  obj["clusters"] = partition.clusters;
  obj["se"] = se;
  std::cout << obj.dump() << "\n";
  return kExitOk;
}

int cmd_eval(const std::string& candidates_file, const std::string& references_file,
             const std::string& dataset_file, const std::string& report_file,
             const std::string& csv_file, const mrgsum::RougeOptions& opts) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!dataset_file.empty()) {
    const auto dataset = load_dataset(dataset_file);
    const auto candidates = read_lines(candidates_file);
    if (candidates.size() != dataset.size()) {
      throw mrgsum::FormatError("candidate count " + std::to_string(candidates.size()) +
                                " does not match dataset size " + std::to_string(dataset.size()));
    }
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      if (!dataset[i].reference_summary) {
        throw mrgsum::FormatError("cluster " + dataset[i].id + " has no reference summary");
      }
      pairs.emplace_back(candidates[i], *dataset[i].reference_summary);
    }
  } else {
    const auto candidates = read_lines(candidates_file);
    const auto references = read_lines(references_file);
    if (candidates.size() != references.size()) {
      throw mrgsum::FormatError("candidate count " + std::to_string(candidates.size()) +
                                " does not match reference count " +
                                std::to_string(references.size()));
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      pairs.emplace_back(candidates[i], references[i]);
    }
  }

  std::vector<mrgsum::PairScores> per_pair;
  per_pair.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mrgsum::rouge_n(pairs[i].second, pairs[i].second, 1, opts).f1 == 0.0) {
      std::cerr << "warning: pair " << i << " has an empty reference\n";
    }
    per_pair.push_back(mrgsum::score_pair(pairs[i].first, pairs[i].second, opts));
  }
  const auto agg = mrgsum::evaluate_dataset(pairs, opts);

  char buf[64];
  nlohmann::ordered_json report;
  report["pairs"] = agg.pairs;
  std::snprintf(buf, sizeof buf, "%.2f", agg.r1);
  report["rouge_1"] = std::stod(buf);
  std::snprintf(buf, sizeof buf, "%.2f", agg.r2);
  report["rouge_2"] = std::stod(buf);
  std::snprintf(buf, sizeof buf, "%.2f", agg.rsu);
  report["rouge_su"] = std::stod(buf);
  OutputFile report_out(report_file);
  report_out.out() << report.dump() << "\n";

  if (!csv_file.empty()) {
    OutputFile csv(csv_file);
    csv.out() << "index,r1_precision,r1_recall,r1_f1,r2_precision,r2_recall,r2_f1,"
                 "rsu_precision,rsu_recall,rsu_f1\n";
    for (std::size_t i = 0; i < per_pair.size(); ++i) {
      const auto& s = per_pair[i];
      char row[512];
      std::snprintf(row, sizeof row, "%zu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f", i,
                    s.r1.precision, s.r1.recall, s.r1.f1, s.r2.precision, s.r2.recall, s.r2.f1,
                    s.rsu.precision, s.rsu.recall, s.rsu.f1);
      csv.out() << row << "\n";
    }
  }
  return kExitOk;
}

int cmd_stats(const std::string& input) {
  const auto dataset = load_dataset(input);
  const auto stats = mrgsum::corpus_stats(dataset);
  nlohmann::ordered_json obj;
  obj["clusters"] = stats.cluster_count;
  obj["mean_doc_tokens"] = stats.mean_doc_tokens;
  obj["mean_docs_per_cluster"] = stats.mean_docs_per_cluster;
  obj["mean_summary_tokens"] = stats.mean_summary_tokens;
  std::cout << obj.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unsupervised multi-document summarization via structural-entropy clustering"};
  app.require_subcommand(1);

  mrgsum::PipelineConfig config;
  mrgsum::RougeOptions rouge_opts;
  std::string input;
  std::string output = "-";
  std::string trace_file;
  std::string labels_file;
  std::string candidates_file;
  std::string references_file;
  std::string dataset_file;
  std::string report_file = "-";
  std::string csv_file;
  std::string dump_edges;
  bool edge_list = false;
  bool no_stem = false;
  bool unlimited_skip = false;
  std::uint64_t shuffle_seed = 0;

  auto add_pipeline_options = [&](CLI::App* cmd) {
    cmd->add_option("--tau", config.tau, "Semantic similarity threshold")
        ->check(CLI::Range(0.0, 0.999999));
    cmd->add_option("--batch-size", config.batch_size, "Clusters per greedy subgraph")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", config.max_iters, "Outer clustering pass cap")
        ->check(CLI::PositiveNumber);
    add_se_mode_option(cmd, config.se_mode);
    auto* seed = cmd->add_option("--shuffle-seed", shuffle_seed,
                                 "Reshuffle cluster order between outer passes");
    cmd->parse_complete_callback([&, seed]() {
      if (seed->count() > 0) config.shuffle_seed = shuffle_seed;
    });
  };

  auto* summarize = app.add_subcommand("summarize", "Summarize every cluster in a dataset");
  summarize->add_option("--input,-i", input, "JSONL file or cluster directory")->required();
  summarize->add_option("--output,-o", output, "Summary file, one line per cluster (- = stdout)");
  add_pipeline_options(summarize);
  summarize->add_option("--c-star", config.c_star, "Retained clusters per summary")
      ->check(CLI::PositiveNumber);
  summarize->add_option("--k-paths", config.k_paths, "Compression candidates per cluster")
      ->check(CLI::PositiveNumber);
  summarize->add_option("--min-words", config.min_words, "Minimum words per compression")
      ->check(CLI::PositiveNumber);
  summarize->add_flag("--trace", config.trace, "Write a JSONL provenance sidecar");
  summarize->add_option("--trace-file", trace_file, "Sidecar path (default <output>.trace.jsonl)");
  summarize->add_option("--parallelism,-j", config.parallelism,
                        "Worker threads (0 = MRGSUM_THREADS, then hardware)");

  auto* cluster_cmd = app.add_subcommand("cluster", "Emit sentence partitions as JSON");
  cluster_cmd->add_option("--input,-i", input, "JSONL file, cluster directory, or edge list")
      ->required();
  cluster_cmd->add_option("--output,-o", output, "Partition JSONL (- = stdout)");
  cluster_cmd->add_flag("--edge-list", edge_list, "Input is a weighted edge list");
  cluster_cmd->add_option("--labels", labels_file, "Also write a .labels file (edge list only)");
  cluster_cmd->add_option("--dump-edges", dump_edges,
                          "Write each integrated graph to <prefix><id>.edges");
  add_pipeline_options(cluster_cmd);

  auto* oracle = app.add_subcommand("oracle", "Exact minimum-SE partition of a small graph");
  oracle->add_option("--input,-i", input, "Weighted edge list (#nodes header)")->required();
  add_se_mode_option(oracle, config.se_mode);

  auto* eval = app.add_subcommand("eval", "ROUGE-1/2/SU scoring");
  eval->add_option("--candidates,-c", candidates_file, "Candidate summaries, one per line")
      ->required();
  eval->add_option("--references,-r", references_file, "Reference summaries, one per line");
  eval->add_option("--dataset,-d", dataset_file, "JSONL dataset carrying reference summaries");
  eval->add_option("--report", report_file, "JSON score report path (- = stdout)");
  eval->add_option("--csv", csv_file, "Aligned per-pair CSV path");
  eval->add_flag("--no-stem", no_stem, "Disable Porter stemming");
  eval->add_flag("--remove-stopwords", rouge_opts.remove_stopwords, "Drop stopwords before scoring");
  eval->add_option("--skip-distance", rouge_opts.skip_distance, "Max gap inside skip-bigrams")
      ->check(CLI::NonNegativeNumber);
  eval->add_flag("--unlimited-skip", unlimited_skip, "Unbounded skip-bigram gap");

  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  stats->add_option("--input,-i", input, "JSONL file or cluster directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  rouge_opts.stem = !no_stem;
  rouge_opts.unlimited_skip = unlimited_skip;

  try {
    if (summarize->parsed()) {
      if (config.trace && trace_file.empty()) {
        if (output == "-") {
          std::cerr << "error: --trace needs --output or --trace-file\n";
          return kExitUsage;
        }
        trace_file = output + ".trace.jsonl";
      }
      return cmd_summarize(input, output, trace_file, config);
    }
    if (cluster_cmd->parsed()) {
      if (!labels_file.empty() && !edge_list) {
        std::cerr << "error: --labels requires --edge-list\n";
        return kExitUsage;
      }
      return cmd_cluster(input, output, edge_list, labels_file, dump_edges, config);
    }
    if (oracle->parsed()) return cmd_oracle(input, config.se_mode);
    if (eval->parsed()) {
      if (references_file.empty() == dataset_file.empty()) {
        std::cerr << "error: eval needs exactly one of --references or --dataset\n";
        return kExitUsage;
      }
      return cmd_eval(candidates_file, references_file, dataset_file, report_file, csv_file,
                      rouge_opts);
    }
    if (stats->parsed()) return cmd_stats(input);
  } catch (const mrgsum::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const mrgsum::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

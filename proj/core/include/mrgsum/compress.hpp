#pragma once

#include <span>
#include <string>
#include <vector>

#include "mrgsum/corpus.hpp"
#include "mrgsum/relgraph.hpp"
#include "mrgsum/setree.hpp"

namespace mrgsum {

// Positional importance: 1 for the lead sentence, 0 for the last, linear in
// between. A single-sentence document counts as a lead sentence.
double position_weight(int position, int doc_sentence_count);
double position_weight(const DocumentCluster& cluster, const Sentence& s);

struct RankedCluster {
  std::vector<NodeId> sentence_ids;  // global ids, ascending
  double score = 0.0;                // sum of position weights
  int rank = 0;                      // 1-based, descending score
};

// Scores every partition cluster by summed positional importance and sorts
// descending; ties go to the cluster with the smallest member id.
std::vector<RankedCluster> rank_clusters(const Partition& partition,
                                         const DocumentCluster& cluster);

std::vector<RankedCluster> truncate(std::vector<RankedCluster> ranked, int c_star);

// Directed word graph over the sentences of one cluster. Nodes are
// (lowered word, coarse pos) plus Start/End; every input sentence is a
// Start -> End path.
class WordGraph {
 public:
  struct Node {
    std::string word;  // lowered
    CoarsePos pos = CoarsePos::Other;
    bool stopword = false;
    int freq = 0;  // number of sentences mapped onto this node
  };
  struct Edge {
    int to = 0;
    int count = 0;        // traversal count
    double weight = 0.0;  // strong-link weight, finite and > 0
  };

  static constexpr int kStart = 0;
  static constexpr int kEnd = 1;

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const std::vector<Edge>& out_edges(int id) const { return out_[static_cast<std::size_t>(id)]; }
  int sentence_count() const { return sentence_count_; }

 private:
  friend WordGraph build_word_graph(const DocumentCluster&, std::span<const NodeId>);
  std::vector<Node> nodes_;
  std::vector<std::vector<Edge>> out_;
  int sentence_count_ = 0;
};

WordGraph build_word_graph(const DocumentCluster& cluster, std::span<const NodeId> sentence_ids);

struct CompressionCandidate {
  std::vector<int> node_path;  // word-graph node ids, Start/End stripped
  std::vector<std::string> words;  // lowered tokens of the path
  double path_weight = 0.0;
  int word_count = 0;  // non-punctuation tokens
  bool has_verb = false;
  double keyphrase_score = 0.0;
  double final_score = 0.0;  // path_weight / (word_count * (1 + keyphrase_score))
};

// Exact K loopless shortest Start -> End paths by total edge weight (Yen),
// filtered to >= min_words word tokens and at least one verb. Deterministic
// order: weight, then token sequence.
std::vector<CompressionCandidate> k_shortest_paths(const WordGraph& graph, int k, int min_words);

struct Keyphrase {
  std::vector<std::string> words;  // lowered
  double weight = 0.0;             // normalized, max 1
};

// Maximal (Adj)*(Noun)+ runs of non-stopword tokens, weighted by TF-IDF of
// the member tokens accumulated over occurrences and normalized to max 1.
std::vector<Keyphrase> extract_keyphrases(const DocumentCluster& cluster,
                                          std::span<const NodeId> sentence_ids,
                                          const TfidfVectors& vectors);

struct CompressionResult {
  std::string text;
  bool fallback = false;  // no valid candidate; highest-position sentence used
  double path_weight = 0.0;
  double keyphrase_score = 0.0;
  double final_score = 0.0;
  int candidate_count = 0;
  std::vector<double> candidate_scores;  // final scores, best first
};

// Compresses one ranked cluster: word graph -> K shortest paths -> keyphrase
// rescoring -> best candidate detokenized. Falls back to the member sentence
// with the highest position weight when no candidate survives the filters.
CompressionResult compress_cluster(const DocumentCluster& cluster, const RankedCluster& rc,
                                   const TfidfVectors& vectors, int k, int min_words);

// Joins detokenized tokens, capitalizes the first word, and guarantees a
// terminal period.
std::string detokenize(std::span<const std::string> words);

struct SummaryOptions {
  int c_star = 14;
  int k_paths = 32;
  int min_words = 8;
};

// rank -> truncate -> compress each retained cluster in rank order -> join.
std::string summarize(const DocumentCluster& cluster, const Partition& partition,
                      const SummaryOptions& opts = {});

}  // namespace mrgsum

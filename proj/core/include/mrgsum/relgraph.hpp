#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mrgsum/corpus.hpp"

namespace mrgsum {

using NodeId = int;

// Sparse TF-IDF vector; entries sorted by term id, weights strictly positive.
struct SparseVector {
  std::vector<std::pair<int, double>> entries;

  bool empty() const { return entries.empty(); }
  double norm() const;
};

double dot(const SparseVector& a, const SparseVector& b);
// Cosine of an empty vector with anything is 0.
double cosine(const SparseVector& a, const SparseVector& b);

class TermIndex {
 public:
  int intern(const std::string& term);
  int lookup(const std::string& term) const;  // -1 when absent
  const std::string& term(int id) const { return terms_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(terms_.size()); }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, int> ids_;
};

struct TfidfVectors {
  TermIndex terms;
  std::vector<SparseVector> by_sentence;  // indexed by global sentence id
};

// tf = raw term count in the sentence, idf = ln((1+S)/(1+sf)) + 1.
// Stopwords and punctuation are excluded; an all-stopword sentence gets an
// empty vector.
TfidfVectors tfidf_vectors(const DocumentCluster& cluster);

enum class Relation { Semantic, Discourse };

// Symmetric weighted edges over sentence nodes, weights in (0, 1], no
// self-loops. Keys are ordered pairs (i < j).
struct TypedEdgeSet {
  Relation relation = Relation::Semantic;
  int node_count = 0;
  std::map<std::pair<NodeId, NodeId>, double> edges;

  // Keeps the maximum when the pair was already present.
  void add_max(NodeId i, NodeId j, double w);
};

// Edge (i,j) iff cosine of the TF-IDF vectors exceeds tau.
TypedEdgeSet semantic_edges(const TfidfVectors& vectors, double tau);

struct DiscourseOptions {
  bool markers = true;   // next sentence starts with a discourse marker
  bool entities = true;  // shared non-stopword noun sets, Jaccard weighted
  bool pronouns = true;  // sentence-initial pronoun links to the predecessor
};

TypedEdgeSet discourse_edges(const DocumentCluster& cluster, const DiscourseOptions& opts = {});

// Single-relation graph produced by the elementwise max of two edge sets.
class IntegratedGraph {
 public:
  IntegratedGraph() = default;
  IntegratedGraph(int node_count, const std::map<std::pair<NodeId, NodeId>, double>& edges);

  int node_count() const { return node_count_; }
  double degree(NodeId v) const { return degrees_[static_cast<std::size_t>(v)]; }
  double total_volume() const { return total_volume_; }
  std::size_t edge_count() const { return edge_sum_count_; }
  const std::vector<std::pair<NodeId, double>>& neighbors(NodeId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  double edge_weight(NodeId i, NodeId j) const;

  template <typename F>
  void for_each_edge(F&& f) const {  // visits each undirected edge once, i < j
    for (NodeId i = 0; i < node_count_; ++i) {
      for (const auto& [j, w] : adjacency_[static_cast<std::size_t>(i)]) {
        if (i < j) f(i, j, w);
      }
    }
  }

 private:
  int node_count_ = 0;
  double total_volume_ = 0.0;
  std::size_t edge_sum_count_ = 0;
  std::vector<double> degrees_;
  std::vector<std::vector<std::pair<NodeId, double>>> adjacency_;
};

// A'[i][j] = max of the two relation weights. Throws FormatError when the
// node universes differ.
IntegratedGraph integrate(const TypedEdgeSet& a, const TypedEdgeSet& b);

// Weighted edge-list interchange format: header "#nodes N", then one
// "i j w" triple per line (i < j).
void write_edge_list(std::ostream& out, const IntegratedGraph& graph);
IntegratedGraph read_edge_list(std::istream& in);

}  // namespace mrgsum

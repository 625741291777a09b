#include "mrgsum/relgraph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "mrgsum/errors.hpp"

namespace mrgsum {

double SparseVector::norm() const {
  double s = 0.0;
  for (const auto& [id, w] : entries) s += w * w;
  return std::sqrt(s);
}

double dot(const SparseVector& a, const SparseVector& b) {
  double s = 0.0;
  auto it_a = a.entries.begin();
  auto it_b = b.entries.begin();
  while (it_a != a.entries.end() && it_b != b.entries.end()) {
    if (it_a->first < it_b->first) {
      ++it_a;
    } else if (it_b->first < it_a->first) {
      ++it_b;
    } else {
      s += it_a->second * it_b->second;
      ++it_a;
      ++it_b;
    }
  }
  return s;
}

double cosine(const SparseVector& a, const SparseVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (na * nb);
}

int TermIndex::intern(const std::string& term) {
  auto [it, inserted] = ids_.try_emplace(term, static_cast<int>(terms_.size()));
  if (inserted) terms_.push_back(term);
  return it->second;
}

int TermIndex::lookup(const std::string& term) const {
  auto it = ids_.find(term);
  return it == ids_.end() ? -1 : it->second;
}

TfidfVectors tfidf_vectors(const DocumentCluster& cluster) {
  TfidfVectors result;
  const auto sentences = cluster.all_sentences();
  const int sentence_count = static_cast<int>(sentences.size());
  result.by_sentence.resize(static_cast<std::size_t>(sentence_count));

  // Raw term counts per sentence, then sentence frequencies.
  std::vector<std::vector<std::pair<int, int>>> counts(static_cast<std::size_t>(sentence_count));
  std::vector<int> sentence_freq;
  for (const Sentence* s : sentences) {
    std::map<int, int> local;
    for (const auto& tok : s->tokens) {
      if (tok.pos == CoarsePos::Punct || tok.is_stopword) continue;
      ++local[result.terms.intern(tok.lowered)];
    }
    auto& row = counts[static_cast<std::size_t>(s->global_id)];
    row.assign(local.begin(), local.end());
    sentence_freq.resize(static_cast<std::size_t>(result.terms.size()), 0);
    for (const auto& [term, _] : row) ++sentence_freq[static_cast<std::size_t>(term)];
  }

  for (int sid = 0; sid < sentence_count; ++sid) {
    auto& vec = result.by_sentence[static_cast<std::size_t>(sid)];
    for (const auto& [term, tf] : counts[static_cast<std::size_t>(sid)]) {
      const double sf = static_cast<double>(sentence_freq[static_cast<std::size_t>(term)]);
      const double idf = std::log((1.0 + sentence_count) / (1.0 + sf)) + 1.0;
      vec.entries.emplace_back(term, static_cast<double>(tf) * idf);
    }
  }
  return result;
}

void TypedEdgeSet::add_max(NodeId i, NodeId j, double w) {
  if (i == j) return;
  if (i > j) std::swap(i, j);
  auto [it, inserted] = edges.try_emplace({i, j}, w);
  if (!inserted && w > it->second) it->second = w;
}

TypedEdgeSet semantic_edges(const TfidfVectors& vectors, double tau) {
  TypedEdgeSet set;
  set.relation = Relation::Semantic;
  set.node_count = static_cast<int>(vectors.by_sentence.size());
  for (int i = 0; i < set.node_count; ++i) {
    const auto& vi = vectors.by_sentence[static_cast<std::size_t>(i)];
    if (vi.empty()) continue;
    for (int j = i + 1; j < set.node_count; ++j) {
      const double c = cosine(vi, vectors.by_sentence[static_cast<std::size_t>(j)]);
      if (c > tau) set.add_max(i, j, std::min(c, 1.0));
    }
  }
  return set;
}

namespace {

const AnnotatedToken* first_word_token(const Sentence& s) {
  for (const auto& tok : s.tokens) {
    if (tok.pos != CoarsePos::Punct) return &tok;
  }
  return nullptr;
}

std::set<std::string> noun_set(const Sentence& s) {
  std::set<std::string> nouns;
  for (const auto& tok : s.tokens) {
    if (tok.pos == CoarsePos::Noun && !tok.is_stopword) nouns.insert(tok.lowered);
  }
  return nouns;
}

}  // namespace

TypedEdgeSet discourse_edges(const DocumentCluster& cluster, const DiscourseOptions& opts) {
  TypedEdgeSet set;
  set.relation = Relation::Discourse;
  set.node_count = cluster.total_sentences();

  // Adjacent-sentence rules within each document.
  for (const auto& doc : cluster.documents) {
    for (std::size_t k = 1; k < doc.sentences.size(); ++k) {
      const Sentence& prev = doc.sentences[k - 1];
      const Sentence& cur = doc.sentences[k];
      const AnnotatedToken* head = first_word_token(cur);
      if (head == nullptr) continue;
      if (opts.markers && is_discourse_marker(head->lowered)) {
        set.add_max(prev.global_id, cur.global_id, 1.0);
      }
      if (opts.pronouns && is_leading_pronoun(head->lowered)) {
        set.add_max(prev.global_id, cur.global_id, 1.0);
      }
    }
  }

  // Shared-entity rule across all sentence pairs.
  if (opts.entities) {
    const auto sentences = cluster.all_sentences();
    std::vector<std::set<std::string>> nouns(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i) nouns[i] = noun_set(*sentences[i]);
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (nouns[i].empty()) continue;
      for (std::size_t j = i + 1; j < sentences.size(); ++j) {
        if (nouns[j].empty()) continue;
        std::size_t shared = 0;
        for (const auto& w : nouns[i]) shared += nouns[j].count(w);
        if (shared == 0) continue;
        const std::size_t unions = nouns[i].size() + nouns[j].size() - shared;
        set.add_max(sentences[i]->global_id, sentences[j]->global_id,
                    static_cast<double>(shared) / static_cast<double>(unions));
      }
    }
  }
  return set;
}

IntegratedGraph::IntegratedGraph(int node_count,
                                 const std::map<std::pair<NodeId, NodeId>, double>& edges)
    : node_count_(node_count),
      degrees_(static_cast<std::size_t>(node_count), 0.0),
      adjacency_(static_cast<std::size_t>(node_count)) {
  for (const auto& [pair, w] : edges) {
    const auto [i, j] = pair;
    if (i == j || w <= 0.0) continue;
    adjacency_[static_cast<std::size_t>(i)].emplace_back(j, w);
    adjacency_[static_cast<std::size_t>(j)].emplace_back(i, w);
    degrees_[static_cast<std::size_t>(i)] += w;
    degrees_[static_cast<std::size_t>(j)] += w;
    ++edge_sum_count_;
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  for (double d : degrees_) total_volume_ += d;
}

double IntegratedGraph::edge_weight(NodeId i, NodeId j) const {
  const auto& row = adjacency_[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const auto& entry, NodeId v) { return entry.first < v; });
  return (it != row.end() && it->first == j) ? it->second : 0.0;
}

IntegratedGraph integrate(const TypedEdgeSet& a, const TypedEdgeSet& b) {
  if (a.node_count != b.node_count) {
    throw FormatError("edge sets cover different node universes (" +
                      std::to_string(a.node_count) + " vs " + std::to_string(b.node_count) + ")");
  }
  std::map<std::pair<NodeId, NodeId>, double> merged = a.edges;
  for (const auto& [pair, w] : b.edges) {
    auto [it, inserted] = merged.try_emplace(pair, w);
    if (!inserted && w > it->second) it->second = w;
  }
  return IntegratedGraph(a.node_count, merged);
}

void write_edge_list(std::ostream& out, const IntegratedGraph& graph) {
  out << "#nodes " << graph.node_count() << "\n";
  graph.for_each_edge([&](NodeId i, NodeId j, double w) {
    std::ostringstream line;
    line.precision(17);
    line << i << ' ' << j << ' ' << w;
    out << line.str() << "\n";
  });
}

IntegratedGraph read_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("edge list: empty input");
  std::istringstream hs(header);
  std::string tag;
  int nodes = 0;
  hs >> tag >> nodes;
  if (tag != "#nodes" || nodes < 0) {
    throw FormatError("edge list: expected header \"#nodes N\", got \"" + header + "\"");
  }
  std::map<std::pair<NodeId, NodeId>, double> edges;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    NodeId i = 0;
    NodeId j = 0;
    double w = 0.0;
    if (!(ls >> i >> j >> w)) {
      throw FormatError("edge list line " + std::to_string(line_no) + ": expected \"i j w\"");
    }
    if (i < 0 || j < 0 || i >= nodes || j >= nodes || i == j || w <= 0.0 ||
        !std::isfinite(w)) {
      throw FormatError("edge list line " + std::to_string(line_no) + ": invalid edge");
    }
    if (i > j) std::swap(i, j);
    edges[{i, j}] = w;
  }
  return IntegratedGraph(nodes, edges);
}

}  // namespace mrgsum

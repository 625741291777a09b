#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mrgsum/compress.hpp"

namespace mrgsum {
namespace {

bool conservative_mapping(const AnnotatedToken& tok) {
  return tok.is_stopword || tok.pos == CoarsePos::Punct;
}

struct NodeContext {
  std::unordered_set<std::string> prev_words;
  std::unordered_set<std::string> next_words;
};

struct SentenceTrack {
  // node id -> 1-based token offset (Start at 0, End at len+1)
  std::unordered_map<int, int> offset_of;
  int length = 0;
};

}  // namespace

WordGraph build_word_graph(const DocumentCluster& cluster, std::span<const NodeId> sentence_ids) {
  WordGraph graph;
  graph.nodes_.push_back({"<start>", CoarsePos::Other, false, 0});
  graph.nodes_.push_back({"<end>", CoarsePos::Other, false, 0});

  std::vector<const Sentence*> sentences;
  sentences.reserve(sentence_ids.size());
  for (NodeId id : sentence_ids) sentences.push_back(&cluster.sentence(id));
  // Longest sentences first; ties keep reading order.
  std::stable_sort(sentences.begin(), sentences.end(), [](const Sentence* a, const Sentence* b) {
    return a->tokens.size() > b->tokens.size();
  });

  std::vector<NodeContext> contexts(2);
  // (word, pos) -> node ids carrying that key, in creation order.
  std::map<std::pair<std::string, int>, std::vector<int>> by_key;
  std::vector<SentenceTrack> tracks;
  std::vector<std::vector<int>> paths;

  auto new_node = [&](const AnnotatedToken& tok) {
    const int id = graph.node_count();
    graph.nodes_.push_back({tok.lowered, tok.pos, tok.is_stopword, 0});
    contexts.emplace_back();
    by_key[{tok.lowered, static_cast<int>(tok.pos)}].push_back(id);
    return id;
  };

  for (const Sentence* sent : sentences) {
    const auto& toks = sent->tokens;
    SentenceTrack track;
    track.length = static_cast<int>(toks.size());
    std::vector<int> path;
    path.push_back(WordGraph::kStart);
    track.offset_of[WordGraph::kStart] = 0;
    std::unordered_set<int> used;  // a sentence claims each node at most once

    for (std::size_t idx = 0; idx < toks.size(); ++idx) {
      const AnnotatedToken& tok = toks[idx];
      const std::string* prev_word = idx > 0 ? &toks[idx - 1].lowered : nullptr;
      const std::string* next_word = idx + 1 < toks.size() ? &toks[idx + 1].lowered : nullptr;

      std::vector<int> candidates;
      auto it = by_key.find({tok.lowered, static_cast<int>(tok.pos)});
      if (it != by_key.end()) {
        for (int id : it->second) {
          if (!used.count(id)) candidates.push_back(id);
        }
      }

      int target = -1;
      if (!conservative_mapping(tok)) {
        if (candidates.size() == 1) {
          target = candidates.front();
        } else if (candidates.size() > 1) {
          // Ambiguous: most overlapping adjacent context, earliest node on ties.
          int best_overlap = -1;
          for (int id : candidates) {
            int overlap = 0;
            if (prev_word && contexts[static_cast<std::size_t>(id)].prev_words.count(*prev_word))
              ++overlap;
            if (next_word && contexts[static_cast<std::size_t>(id)].next_words.count(*next_word))
              ++overlap;
            if (overlap > best_overlap) {
              best_overlap = overlap;
              target = id;
            }
          }
        }
      } else {
        // Stopwords and punctuation map only on a matching non-stopword
        // neighbor, otherwise they duplicate.
        const std::string* prev_ctx =
            (idx > 0 && !conservative_mapping(toks[idx - 1])) ? &toks[idx - 1].lowered : nullptr;
        const std::string* next_ctx =
            (idx + 1 < toks.size() && !conservative_mapping(toks[idx + 1]))
                ? &toks[idx + 1].lowered
                : nullptr;
        int best_overlap = 0;
        for (int id : candidates) {
          int overlap = 0;
          if (prev_ctx && contexts[static_cast<std::size_t>(id)].prev_words.count(*prev_ctx))
            ++overlap;
          if (next_ctx && contexts[static_cast<std::size_t>(id)].next_words.count(*next_ctx))
            ++overlap;
          if (overlap > best_overlap) {
            best_overlap = overlap;
            target = id;
          }
        }
      }
      if (target < 0) target = new_node(tok);

      ++graph.nodes_[static_cast<std::size_t>(target)].freq;
      if (prev_word) contexts[static_cast<std::size_t>(target)].prev_words.insert(*prev_word);
      if (next_word) contexts[static_cast<std::size_t>(target)].next_words.insert(*next_word);
      used.insert(target);
      track.offset_of[target] = static_cast<int>(idx) + 1;
      path.push_back(target);
    }

    path.push_back(WordGraph::kEnd);
    track.offset_of[WordGraph::kEnd] = track.length + 1;
    paths.push_back(std::move(path));
    tracks.push_back(std::move(track));
  }

  graph.sentence_count_ = static_cast<int>(sentences.size());
  graph.nodes_[WordGraph::kStart].freq = graph.sentence_count_;
  graph.nodes_[WordGraph::kEnd].freq = graph.sentence_count_;

  // Traversal counts from the sentence paths.
  std::map<std::pair<int, int>, int> counts;
  for (const auto& path : paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) ++counts[{path[i], path[i + 1]}];
  }

  graph.out_.resize(static_cast<std::size_t>(graph.node_count()));
  for (const auto& [pair, count] : counts) {
    const auto [a, b] = pair;
    // Strong-link weight: co-occurrence proximity over all sentences where
    // a precedes b, against the combined node frequencies.
    double inv_dist = 0.0;
    for (const auto& track : tracks) {
      auto ia = track.offset_of.find(a);
      auto ib = track.offset_of.find(b);
      if (ia == track.offset_of.end() || ib == track.offset_of.end()) continue;
      if (ia->second < ib->second) inv_dist += 1.0 / (ib->second - ia->second);
    }
    const double freq_sum = graph.nodes_[static_cast<std::size_t>(a)].freq +
                            graph.nodes_[static_cast<std::size_t>(b)].freq;
    graph.out_[static_cast<std::size_t>(a)].push_back({b, count, freq_sum / inv_dist});
  }
  for (auto& edges : graph.out_) {
    std::sort(edges.begin(), edges.end(),
              [](const WordGraph::Edge& x, const WordGraph::Edge& y) { return x.to < y.to; });
  }
  return graph;
}

namespace {

using PathVec = std::vector<int>;

struct CandidatePath {
  double cost = 0.0;
  PathVec nodes;
  bool operator<(const CandidatePath& o) const {
    if (cost != o.cost) return cost < o.cost;
    return nodes < o.nodes;
  }
};

// Dijkstra from `source` to End, ignoring banned nodes and banned edges.
// Deterministic: the queue breaks cost ties by node id.
bool shortest_path(const WordGraph& graph, int source, const std::vector<bool>& banned_node,
                   const std::set<std::pair<int, int>>& banned_edge, CandidatePath& out) {
  const int n = graph.node_count();
  std::vector<double> dist(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[static_cast<std::size_t>(source)] = 0.0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    if (v == WordGraph::kEnd) break;
    for (const auto& e : graph.out_edges(v)) {
      if (banned_node[static_cast<std::size_t>(e.to)]) continue;
      if (banned_edge.count({v, e.to})) continue;
      const double nd = d + e.weight;
      if (nd < dist[static_cast<std::size_t>(e.to)]) {
        dist[static_cast<std::size_t>(e.to)] = nd;
        pred[static_cast<std::size_t>(e.to)] = v;
        queue.push({nd, e.to});
      }
    }
  }
  if (!std::isfinite(dist[WordGraph::kEnd])) return false;
  out.cost = dist[WordGraph::kEnd];
  out.nodes.clear();
  for (int v = WordGraph::kEnd; v != -1; v = pred[static_cast<std::size_t>(v)]) {
    out.nodes.push_back(v);
    if (v == source) break;
  }
  std::reverse(out.nodes.begin(), out.nodes.end());
  return true;
}

double edge_weight_between(const WordGraph& graph, int a, int b) {
  for (const auto& e : graph.out_edges(a)) {
    if (e.to == b) return e.weight;
  }
  return std::numeric_limits<double>::infinity();
}

// Yen's loopless K shortest paths from Start to End.
std::vector<CandidatePath> yen_k_shortest(const WordGraph& graph, int k) {
  std::vector<CandidatePath> found;
  std::vector<bool> no_ban(static_cast<std::size_t>(graph.node_count()), false);
  CandidatePath first;
  if (!shortest_path(graph, WordGraph::kStart, no_ban, {}, first)) return found;
  found.push_back(std::move(first));

  std::set<CandidatePath> frontier;
  while (static_cast<int>(found.size()) < k) {
    const PathVec& prev = found.back().nodes;
    for (std::size_t spur_idx = 0; spur_idx + 1 < prev.size(); ++spur_idx) {
      const int spur_node = prev[spur_idx];
      PathVec root(prev.begin(), prev.begin() + static_cast<long>(spur_idx) + 1);

      std::set<std::pair<int, int>> banned_edges;
      for (const auto& p : found) {
        if (p.nodes.size() > spur_idx &&
            std::equal(root.begin(), root.end() - 1, p.nodes.begin())) {
          if (p.nodes[spur_idx] == spur_node && spur_idx + 1 < p.nodes.size()) {
            banned_edges.insert({spur_node, p.nodes[spur_idx + 1]});
          }
        }
      }
      std::vector<bool> banned_node(static_cast<std::size_t>(graph.node_count()), false);
      for (std::size_t i = 0; i < spur_idx; ++i) banned_node[static_cast<std::size_t>(prev[i])] = true;

      CandidatePath spur;
      if (!shortest_path(graph, spur_node, banned_node, banned_edges, spur)) continue;

      CandidatePath total;
      total.nodes.assign(root.begin(), root.end() - 1);
      total.nodes.insert(total.nodes.end(), spur.nodes.begin(), spur.nodes.end());
      total.cost = spur.cost;
      for (std::size_t i = 0; i + 1 < root.size(); ++i) {
        total.cost += edge_weight_between(graph, root[i], root[i + 1]);
      }
      bool already = false;
      for (const auto& p : found) {
        if (p.nodes == total.nodes) {
          already = true;
          break;
        }
      }
      if (!already) frontier.insert(std::move(total));
    }
    if (frontier.empty()) break;
    found.push_back(*frontier.begin());
    frontier.erase(frontier.begin());
  }
  return found;
}

}  // namespace

std::vector<CompressionCandidate> k_shortest_paths(const WordGraph& graph, int k, int min_words) {
  std::vector<CompressionCandidate> out;
  if (k < 1 || graph.node_count() <= 2) return out;
  for (const auto& path : yen_k_shortest(graph, k)) {
    CompressionCandidate cand;
    cand.path_weight = path.cost;
    for (int id : path.nodes) {
      if (id == WordGraph::kStart || id == WordGraph::kEnd) continue;
      const auto& node = graph.node(id);
      cand.node_path.push_back(id);
      cand.words.push_back(node.word);
      if (node.pos != CoarsePos::Punct) ++cand.word_count;
      if (node.pos == CoarsePos::Verb) cand.has_verb = true;
    }
    if (cand.word_count < min_words || !cand.has_verb) continue;
    out.push_back(std::move(cand));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CompressionCandidate& a, const CompressionCandidate& b) {
                     if (a.path_weight != b.path_weight) return a.path_weight < b.path_weight;
                     return a.words < b.words;
                   });
  return out;
}

}  // namespace mrgsum

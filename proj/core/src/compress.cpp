#include "mrgsum/compress.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

namespace mrgsum {

double position_weight(int position, int doc_sentence_count) {
  if (doc_sentence_count <= 1) return 1.0;  // a lone sentence is the lead sentence
  return 1.0 - static_cast<double>(position - 1) / static_cast<double>(doc_sentence_count - 1);
}

double position_weight(const DocumentCluster& cluster, const Sentence& s) {
  const int n = cluster.documents[static_cast<std::size_t>(s.doc_index)].sentence_count();
  return position_weight(s.position, n);
}

std::vector<RankedCluster> rank_clusters(const Partition& partition,
                                         const DocumentCluster& cluster) {
  std::vector<RankedCluster> ranked;
  ranked.reserve(partition.clusters.size());
  for (const auto& members : partition.clusters) {
    RankedCluster rc;
    rc.sentence_ids = members;
    std::sort(rc.sentence_ids.begin(), rc.sentence_ids.end());
    for (NodeId id : rc.sentence_ids) {
      rc.score += position_weight(cluster, cluster.sentence(id));
    }
    ranked.push_back(std::move(rc));
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedCluster& a, const RankedCluster& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.sentence_ids.front() < b.sentence_ids.front();
  });
  for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].rank = static_cast<int>(i) + 1;
  return ranked;
}

std::vector<RankedCluster> truncate(std::vector<RankedCluster> ranked, int c_star) {
  if (c_star < static_cast<int>(ranked.size())) {
    ranked.resize(static_cast<std::size_t>(std::max(c_star, 0)));
  }
  return ranked;
}

std::vector<Keyphrase> extract_keyphrases(const DocumentCluster& cluster,
                                          std::span<const NodeId> sentence_ids,
                                          const TfidfVectors& vectors) {
  auto term_weight = [&](int sentence_id, const std::string& word) {
    const int term = vectors.terms.lookup(word);
    if (term < 0) return 0.0;
    const auto& entries = vectors.by_sentence[static_cast<std::size_t>(sentence_id)].entries;
    auto it = std::lower_bound(entries.begin(), entries.end(), term,
                               [](const auto& e, int t) { return e.first < t; });
    return (it != entries.end() && it->first == term) ? it->second : 0.0;
  };

  std::map<std::vector<std::string>, double> weights;
  for (NodeId sid : sentence_ids) {
    const auto& toks = cluster.sentence(sid).tokens;
    std::size_t i = 0;
    while (i < toks.size()) {
      std::size_t j = i;
      while (j < toks.size() && toks[j].pos == CoarsePos::Adj && !toks[j].is_stopword) ++j;
      std::size_t k = j;
      while (k < toks.size() && toks[k].pos == CoarsePos::Noun && !toks[k].is_stopword) ++k;
      if (k == j) {  // no noun head; restart after the failed start
        i = std::max(j, i + 1);
        continue;
      }
      std::vector<std::string> words;
      double occurrence = 0.0;
      for (std::size_t t = i; t < k; ++t) {
        words.push_back(toks[t].lowered);
        occurrence += term_weight(sid, toks[t].lowered);
      }
      occurrence /= static_cast<double>(words.size());
      weights[std::move(words)] += occurrence;
      i = k;
    }
  }

  double max_weight = 0.0;
  for (const auto& [_, w] : weights) max_weight = std::max(max_weight, w);
  std::vector<Keyphrase> out;
  out.reserve(weights.size());
  for (auto& [words, w] : weights) {
    out.push_back({words, max_weight > 0.0 ? w / max_weight : 0.0});
  }
  return out;
}

namespace {

bool contains_phrase(const std::vector<std::string>& words,
                     const std::vector<std::string>& phrase) {
  if (phrase.empty() || phrase.size() > words.size()) return false;
  for (std::size_t i = 0; i + phrase.size() <= words.size(); ++i) {
    if (std::equal(phrase.begin(), phrase.end(), words.begin() + static_cast<long>(i))) {
      return true;
    }
  }
  return false;
}

bool attaches_left(const std::string& w) {
  static const std::string left = ".,;:!?%)]'";
  return w.size() == 1 && left.find(w[0]) != std::string::npos;
}

bool attaches_right(const std::string& w) {
  return w.size() == 1 && (w[0] == '(' || w[0] == '[' || w[0] == '$');
}

}  // namespace

std::string detokenize(std::span<const std::string> words) {
  std::string out;
  bool suppress_space = false;
  for (const auto& w : words) {
    if (!out.empty() && !attaches_left(w) && !suppress_space) out += ' ';
    suppress_space = attaches_right(w);
    out += w;
  }
  // Sentence-initial capitalization.
  for (char& c : out) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '"' && c != '\'' && c != '(') break;
  }
  if (!out.empty() && out.back() != '.' && out.back() != '!' && out.back() != '?') {
    out += '.';
  }
  return out;
}

CompressionResult compress_cluster(const DocumentCluster& cluster, const RankedCluster& rc,
                                   const TfidfVectors& vectors, int k, int min_words) {
  CompressionResult result;
  WordGraph graph = build_word_graph(cluster, rc.sentence_ids);
  auto candidates = k_shortest_paths(graph, k, min_words);
  result.candidate_count = static_cast<int>(candidates.size());

  if (candidates.empty()) {
    // Fallback: the member sentence with the highest position weight.
    const Sentence* best = nullptr;
    double best_w = -1.0;
    for (NodeId id : rc.sentence_ids) {
      const Sentence& s = cluster.sentence(id);
      const double w = position_weight(cluster, s);
      if (w > best_w) {
        best_w = w;
        best = &s;
      }
    }
    result.fallback = true;
    result.text = best != nullptr ? best->raw_text : std::string{};
    return result;
  }

  const auto keyphrases = extract_keyphrases(cluster, rc.sentence_ids, vectors);
  for (auto& cand : candidates) {
    for (const auto& phrase : keyphrases) {
      if (contains_phrase(cand.words, phrase.words)) cand.keyphrase_score += phrase.weight;
    }
    cand.final_score =
        cand.path_weight / (static_cast<double>(cand.word_count) * (1.0 + cand.keyphrase_score));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const CompressionCandidate& a, const CompressionCandidate& b) {
                     if (a.final_score != b.final_score) return a.final_score < b.final_score;
                     if (a.path_weight != b.path_weight) return a.path_weight < b.path_weight;
                     return a.words < b.words;
                   });
  const auto& best = candidates.front();
  result.text = detokenize(best.words);
  result.path_weight = best.path_weight;
  result.keyphrase_score = best.keyphrase_score;
  result.final_score = best.final_score;
  result.candidate_scores.reserve(candidates.size());
  for (const auto& cand : candidates) result.candidate_scores.push_back(cand.final_score);
  return result;
}

std::string summarize(const DocumentCluster& cluster, const Partition& partition,
                      const SummaryOptions& opts) {
  const TfidfVectors vectors = tfidf_vectors(cluster);
  auto retained = truncate(rank_clusters(partition, cluster), opts.c_star);
  std::string summary;
  for (const auto& rc : retained) {
    const auto result = compress_cluster(cluster, rc, vectors, opts.k_paths, opts.min_words);
    if (result.text.empty()) continue;
    if (!summary.empty()) summary += ' ';
    summary += result.text;
  }
  return summary;
}

}  // namespace mrgsum

#include "mrgsum/rougeval.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mrgsum/corpus.hpp"

namespace mrgsum {
namespace {

// ---------------------------------------------------------------------------
// Porter stemmer (the classic five-step algorithm).
// ---------------------------------------------------------------------------

bool is_cons(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_cons(w, i - 1);
    default:
      return true;
  }
}

// Number of VC sequences in [C](VC)^m[V].
int measure(const std::string& w) {
  int m = 0;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n && is_cons(w, i)) ++i;
  while (i < n) {
    while (i < n && !is_cons(w, i)) ++i;
    if (i == n) break;
    ++m;
    while (i < n && is_cons(w, i)) ++i;
  }
  return m;
}

bool has_vowel(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_cons(w, i)) return true;
  }
  return false;
}

bool double_cons(const std::string& w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_cons(w, n - 1);
}

// consonant-vowel-consonant ending, final consonant not w, x or y.
bool cvc(const std::string& w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  if (!is_cons(w, n - 3) || is_cons(w, n - 2) || !is_cons(w, n - 1)) return false;
  const char c = w[n - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string stem_part(const std::string& w, std::string_view suffix) {
  return w.substr(0, w.size() - suffix.size());
}

struct Rule {
  std::string_view from;
  std::string_view to;
  int min_measure;  // condition m > min_measure on the stem
};

// Longest matching suffix wins; its measure condition decides.
bool apply_rules(std::string& w, std::initializer_list<Rule> rules) {
  const Rule* best = nullptr;
  for (const auto& r : rules) {
    if (ends(w, r.from) && (best == nullptr || r.from.size() > best->from.size())) best = &r;
  }
  if (best == nullptr) return false;
  std::string stem = stem_part(w, best->from);
  if (measure(stem) > best->min_measure) {
    w = stem + std::string(best->to);
    return true;
  }
  return false;
}

std::string porter(std::string w) {
  if (w.size() <= 2) return w;

  // Step 1a
  if (ends(w, "sses")) {
    w = stem_part(w, "es");
  } else if (ends(w, "ies")) {
    w = stem_part(w, "es");
  } else if (!ends(w, "ss") && ends(w, "s")) {
    w = stem_part(w, "s");
  }

  // Step 1b
  bool fired = false;
  if (ends(w, "eed")) {
    if (measure(stem_part(w, "eed")) > 0) w = stem_part(w, "d");
  } else if (ends(w, "ed") && has_vowel(stem_part(w, "ed"))) {
    w = stem_part(w, "ed");
    fired = true;
  } else if (ends(w, "ing") && has_vowel(stem_part(w, "ing"))) {
    w = stem_part(w, "ing");
    fired = true;
  }
  if (fired) {
    if (ends(w, "at") || ends(w, "bl") || ends(w, "iz")) {
      w += 'e';
    } else if (double_cons(w) && !ends(w, "l") && !ends(w, "s") && !ends(w, "z")) {
      w.pop_back();
    } else if (measure(w) == 1 && cvc(w)) {
      w += 'e';
    }
  }

  // Step 1c
  if (ends(w, "y") && has_vowel(stem_part(w, "y"))) w.back() = 'i';

  // Step 2
  apply_rules(w, {{"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
                  {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
                  {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
                  {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
                  {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
                  {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
                  {"iviti", "ive", 0},   {"biliti", "ble", 0}});

  // Step 3
  apply_rules(w, {{"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0}, {"iciti", "ic", 0},
                  {"ical", "ic", 0},  {"ful", "", 0},   {"ness", "", 0}});

  // Step 4
  {
    const Rule rules[] = {{"al", "", 1},    {"ance", "", 1}, {"ence", "", 1}, {"er", "", 1},
                          {"ic", "", 1},    {"able", "", 1}, {"ible", "", 1}, {"ant", "", 1},
                          {"ement", "", 1}, {"ment", "", 1}, {"ent", "", 1},  {"ion", "", 1},
                          {"ou", "", 1},    {"ism", "", 1},  {"ate", "", 1},  {"iti", "", 1},
                          {"ous", "", 1},   {"ive", "", 1},  {"ize", "", 1}};
    const Rule* best = nullptr;
    for (const auto& r : rules) {
      if (ends(w, r.from) && (best == nullptr || r.from.size() > best->from.size())) best = &r;
    }
    if (best != nullptr) {
      std::string stem = stem_part(w, best->from);
      const bool ion_ok = best->from != "ion" || ends(stem, "s") || ends(stem, "t");
      if (measure(stem) > 1 && ion_ok) w = stem;
    }
  }

  // Step 5a
  if (ends(w, "e")) {
    std::string stem = stem_part(w, "e");
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !cvc(stem))) w = stem;
  }
  // Step 5b
  if (measure(w) > 1 && double_cons(w) && ends(w, "l")) w.pop_back();
  return w;
}

// ---------------------------------------------------------------------------
// Counting units
// ---------------------------------------------------------------------------

std::vector<std::string> rouge_tokens(const std::string& text, const RougeOptions& opts) {
  std::vector<std::string> out;
  for (const auto& tok : annotate(text)) {
    if (tok.pos == CoarsePos::Punct) continue;
    if (opts.remove_stopwords && tok.is_stopword) continue;
    std::string word = tok.lowered;
    if (opts.stem &&
        std::all_of(word.begin(), word.end(),
                    [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; })) {
      word = porter(word);
    }
    out.push_back(std::move(word));
  }
  return out;
}

using UnitCounts = std::map<std::string, int>;

UnitCounts ngram_counts(const std::vector<std::string>& tokens, int n) {
  UnitCounts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
    std::string key;
    for (int j = 0; j < n; ++j) {
      if (j > 0) key += '\x1f';
      key += tokens[i + static_cast<std::size_t>(j)];
    }
    ++counts[key];
  }
  return counts;
}

UnitCounts su_counts(const std::vector<std::string>& tokens, const RougeOptions& opts) {
  UnitCounts counts;
  for (const auto& t : tokens) ++counts["u\x1f" + t];
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      const std::size_t gap = j - i - 1;
      if (!opts.unlimited_skip && gap > static_cast<std::size_t>(opts.skip_distance)) break;
      ++counts["b\x1f" + tokens[i] + '\x1f' + tokens[j]];
    }
  }
  return counts;
}

RougeScore score_counts(const UnitCounts& cand, const UnitCounts& ref) {
  long cand_total = 0;
  long ref_total = 0;
  long overlap = 0;
  for (const auto& [_, c] : cand) cand_total += c;
  for (const auto& [_, c] : ref) ref_total += c;
  for (const auto& [unit, c] : cand) {
    auto it = ref.find(unit);
    if (it != ref.end()) overlap += std::min(c, it->second);  // clipped
  }
  RougeScore score;
  if (ref_total == 0) return score;  // empty reference: all zero
  score.recall = static_cast<double>(overlap) / static_cast<double>(ref_total);
  score.precision =
      cand_total == 0 ? 0.0 : static_cast<double>(overlap) / static_cast<double>(cand_total);
  const double pr = score.precision + score.recall;
  score.f1 = pr > 0.0 ? 2.0 * score.precision * score.recall / pr : 0.0;
  return score;
}

}  // namespace

std::string porter_stem(const std::string& word) { return porter(word); }

RougeScore rouge_n(const std::string& candidate, const std::string& reference, int n,
                   const RougeOptions& opts) {
  const auto cand = rouge_tokens(candidate, opts);
  const auto ref = rouge_tokens(reference, opts);
  return score_counts(ngram_counts(cand, n), ngram_counts(ref, n));
}

RougeScore rouge_su(const std::string& candidate, const std::string& reference,
                    const RougeOptions& opts) {
  const auto cand = rouge_tokens(candidate, opts);
  const auto ref = rouge_tokens(reference, opts);
  return score_counts(su_counts(cand, opts), su_counts(ref, opts));
}

PairScores score_pair(const std::string& candidate, const std::string& reference,
                      const RougeOptions& opts) {
  PairScores scores;
  scores.r1 = rouge_n(candidate, reference, 1, opts);
  scores.r2 = rouge_n(candidate, reference, 2, opts);
  scores.rsu = rouge_su(candidate, reference, opts);
  return scores;
}

DatasetRouge evaluate_dataset(std::span<const std::pair<std::string, std::string>> pairs,
                              const RougeOptions& opts) {
  DatasetRouge agg;
  agg.pairs = pairs.size();
  if (pairs.empty()) return agg;
  for (const auto& [cand, ref] : pairs) {
    const PairScores s = score_pair(cand, ref, opts);
    agg.r1 += s.r1.f1;
    agg.r2 += s.r2.f1;
    agg.rsu += s.rsu.f1;
  }
  const double n = static_cast<double>(pairs.size());
  agg.r1 = agg.r1 / n * 100.0;
  agg.r2 = agg.r2 / n * 100.0;
  agg.rsu = agg.rsu / n * 100.0;
  return agg;
}

}  // namespace mrgsum

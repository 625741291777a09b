#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mrgsum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct RougeOptions {
  bool stem = true;              // Porter stemming
  bool remove_stopwords = false;
  int skip_distance = 4;         // max words skipped inside a skip-bigram
  bool unlimited_skip = false;
};

// Porter stemmer (classic five-step algorithm), exposed for tests.
std::string porter_stem(const std::string& word);

// Clipped n-gram multiset overlap over annotated, case-folded, stemmed
// tokens (punctuation dropped). Empty reference scores all zero.
RougeScore rouge_n(const std::string& candidate, const std::string& reference, int n,
                   const RougeOptions& opts = {});

// Counting units are unigrams plus skip-bigrams whose gap (words skipped)
// is at most skip_distance.
RougeScore rouge_su(const std::string& candidate, const std::string& reference,
                    const RougeOptions& opts = {});

struct DatasetRouge {
  double r1 = 0.0;  // mean F1 x 100
  double r2 = 0.0;
  double rsu = 0.0;
  std::size_t pairs = 0;
};

struct PairScores {
  RougeScore r1, r2, rsu;
};

PairScores score_pair(const std::string& candidate, const std::string& reference,
                      const RougeOptions& opts = {});

DatasetRouge evaluate_dataset(std::span<const std::pair<std::string, std::string>> pairs,
                              const RougeOptions& opts = {});

}  // namespace mrgsum

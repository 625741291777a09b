#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mrgsum {

// Coarse part-of-speech inventory. Enough for noun-phrase keyphrases and
// verb-presence constraints; a finer tagger can be plugged in behind annotate().
enum class CoarsePos : std::uint8_t { Noun, Verb, Adj, Adv, Func, Punct, Num, Other };

std::string_view to_string(CoarsePos pos);

struct AnnotatedToken {
  std::string surface;
  std::string lowered;  // case-folded surface
  CoarsePos pos = CoarsePos::Other;
  bool is_stopword = false;
};

struct Sentence {
  int doc_index = 0;
  int position = 0;  // 1-based within the document
  int global_id = 0;  // unique within the cluster, assigned in reading order
  std::string raw_text;
  std::vector<AnnotatedToken> tokens;
  // Reserved attachment slot for dense sentence vectors. Nothing reads it.
  std::optional<std::vector<float>> embedding;
};

struct Document {
  int index = 0;
  std::vector<Sentence> sentences;
  int sentence_count() const { return static_cast<int>(sentences.size()); }
};

struct DocumentCluster {
  std::string id;
  std::vector<Document> documents;
  std::optional<std::string> reference_summary;

  int total_sentences() const;
  const Sentence& sentence(int global_id) const;
  std::vector<const Sentence*> all_sentences() const;
};

// Lexicon lookups shared across modules. All lists are fixed English lists
// compiled into the library.
bool is_stopword(std::string_view lowered);
bool is_discourse_marker(std::string_view lowered);
bool is_leading_pronoun(std::string_view lowered);

// Rule-based sentence segmentation: terminal punctuation with an
// abbreviation guard. Whitespace-only input yields an empty sequence.
std::vector<std::string> split_sentences(const std::string& text);

// Whitespace/punctuation tokenization plus the coarse tagger. Leading and
// trailing punctuation become separate Punct tokens; internal punctuation
// ("6.5-magnitude", "u.s.") stays inside the token.
std::vector<AnnotatedToken> annotate(const std::string& sentence);

// Builds a fully segmented and annotated cluster from raw document texts.
// Throws FormatError if documents is empty or any document segments to
// zero sentences.
DocumentCluster make_cluster(std::string id, const std::vector<std::string>& document_texts,
                             std::optional<std::string> reference_summary);

// JSONL loader: one cluster per line, {"id": optional, "documents": [...],
// "summary": optional}. Errors name the offending line number.
std::vector<DocumentCluster> load_jsonl(const std::filesystem::path& path);

// Directory loader for DUC-style data: one subdirectory per cluster, one
// plain-text file per document; a file named "summary.txt" inside the
// cluster directory is treated as the reference summary.
std::vector<DocumentCluster> load_directory(const std::filesystem::path& root);

// Serializes a cluster back to one JSONL line (document texts are the
// original sentence texts joined with spaces when reconstructed).
std::string to_jsonl_line(const DocumentCluster& cluster);

struct CorpusStats {
  std::size_t cluster_count = 0;
  double mean_doc_tokens = 0.0;
  double mean_docs_per_cluster = 0.0;
  double mean_summary_tokens = 0.0;  // over clusters that carry a reference
};

CorpusStats corpus_stats(std::span<const DocumentCluster> dataset);

}  // namespace mrgsum

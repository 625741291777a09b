#include "mrgsum/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lexicon.hpp"
#include "mrgsum/errors.hpp"

namespace mrgsum {
namespace {

using json = nlohmann::ordered_json;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(lower(c));
  return out;
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_closing(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

// Word immediately before position `i` (letters and internal periods),
// lowered, without a trailing period. Used for the abbreviation guard.
std::string word_before(const std::string& text, std::size_t i) {
  std::size_t end = i;
  std::size_t begin = end;
  while (begin > 0 && (is_alpha(text[begin - 1]) || text[begin - 1] == '.')) --begin;
  std::string w = to_lower(std::string_view(text).substr(begin, end - begin));
  while (!w.empty() && w.back() == '.') w.pop_back();
  return w;
}

bool all_punct(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return !is_alnum(c); });
}

bool numeric_like(std::string_view s) {
  bool saw_digit = false;
  for (char c : s) {
    if (is_digit(c)) {
      saw_digit = true;
    } else if (c != '.' && c != ',' && c != ':' && c != '-' && c != '%' && c != '/') {
      return false;
    }
  }
  return saw_digit;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

CoarsePos tag_word(const std::string& lowered) {
  if (all_punct(lowered)) return CoarsePos::Punct;
  if (numeric_like(lowered)) return CoarsePos::Num;
  if (lexicon::is_known_verb(lowered)) return CoarsePos::Verb;
  if (lexicon::is_function_word(lowered)) return CoarsePos::Func;
  if (lexicon::is_known_adjective(lowered)) return CoarsePos::Adj;
  // Suffix rules, most specific first.
  if (ends_with(lowered, "ly")) return CoarsePos::Adv;
  if (ends_with(lowered, "tion") || ends_with(lowered, "tions") || ends_with(lowered, "sion") ||
      ends_with(lowered, "sions") || ends_with(lowered, "ment") || ends_with(lowered, "ments") ||
      ends_with(lowered, "ness") || ends_with(lowered, "ity") || ends_with(lowered, "ities") ||
      ends_with(lowered, "ance") || ends_with(lowered, "ence") || ends_with(lowered, "ship") ||
      ends_with(lowered, "hood") || ends_with(lowered, "ism")) {
    return CoarsePos::Noun;
  }
  if (ends_with(lowered, "ous") || ends_with(lowered, "ful") || ends_with(lowered, "ive") ||
      ends_with(lowered, "able") || ends_with(lowered, "ible") || ends_with(lowered, "ical") ||
      ends_with(lowered, "less") || ends_with(lowered, "ish") || ends_with(lowered, "est")) {
    return CoarsePos::Adj;
  }
  if (ends_with(lowered, "ing") || ends_with(lowered, "ed") || ends_with(lowered, "ifies") ||
      ends_with(lowered, "izes") || ends_with(lowered, "ify") || ends_with(lowered, "ize")) {
    return CoarsePos::Verb;
  }
  return CoarsePos::Noun;  // open-class default
}

AnnotatedToken make_token(std::string surface) {
  AnnotatedToken t;
  t.lowered = to_lower(surface);
  t.surface = std::move(surface);
  t.pos = tag_word(t.lowered);
  t.is_stopword = is_stopword(t.lowered);
  return t;
}

}  // namespace

std::string_view to_string(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::Noun: return "NOUN";
    case CoarsePos::Verb: return "VERB";
    case CoarsePos::Adj: return "ADJ";
    case CoarsePos::Adv: return "ADV";
    case CoarsePos::Func: return "FUNC";
    case CoarsePos::Punct: return "PUNCT";
    case CoarsePos::Num: return "NUM";
    case CoarsePos::Other: return "OTHER";
  }
  return "OTHER";
}

std::vector<std::string> split_sentences(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  std::size_t i = 0;
  auto flush = [&](std::size_t end) {
    std::size_t b = start;
    while (b < end && is_space(text[b])) ++b;
    std::size_t e = end;
    while (e > b && is_space(text[e - 1])) --e;
    if (e > b) out.emplace_back(text.substr(b, e - b));
    start = end;
  };
  while (i < text.size()) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    std::size_t punct_begin = i;
    while (i < text.size() && is_terminal(text[i])) ++i;
    while (i < text.size() && is_closing(text[i])) ++i;
    bool at_boundary = i >= text.size() || is_space(text[i]);
    if (!at_boundary) continue;
    if (text[punct_begin] == '.' && lexicon::is_abbreviation(word_before(text, punct_begin))) {
      continue;  // "Dr.", "p.m.", ... never end a sentence here
    }
    flush(i);
  }
  flush(text.size());
  return out;
}

std::vector<AnnotatedToken> annotate(const std::string& sentence) {
  std::vector<AnnotatedToken> tokens;
  std::size_t i = 0;
  const std::size_t n = sentence.size();
  while (i < n) {
    if (is_space(sentence[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !is_space(sentence[j])) ++j;
    std::string_view chunk(sentence.data() + i, j - i);
    i = j;

    // Peel leading punctuation.
    std::size_t b = 0;
    while (b < chunk.size() && !is_alnum(chunk[b])) {
      tokens.push_back(make_token(std::string(1, chunk[b])));
      ++b;
    }
    // Find the word core; trailing punctuation becomes separate tokens.
    std::size_t e = chunk.size();
    while (e > b && !is_alnum(chunk[e - 1])) --e;
    if (e > b) tokens.push_back(make_token(std::string(chunk.substr(b, e - b))));
    for (std::size_t k = e; k < chunk.size(); ++k) {
      tokens.push_back(make_token(std::string(1, chunk[k])));
    }
  }
  return tokens;
}

int DocumentCluster::total_sentences() const {
  int n = 0;
  for (const auto& d : documents) n += d.sentence_count();
  return n;
}

const Sentence& DocumentCluster::sentence(int global_id) const {
  int offset = global_id;
  for (const auto& d : documents) {
    if (offset < d.sentence_count()) return d.sentences[static_cast<std::size_t>(offset)];
    offset -= d.sentence_count();
  }
  throw std::out_of_range("sentence id " + std::to_string(global_id) + " out of range");
}

std::vector<const Sentence*> DocumentCluster::all_sentences() const {
  std::vector<const Sentence*> out;
  out.reserve(static_cast<std::size_t>(total_sentences()));
  for (const auto& d : documents) {
    for (const auto& s : d.sentences) out.push_back(&s);
  }
  return out;
}

DocumentCluster make_cluster(std::string id, const std::vector<std::string>& document_texts,
                             std::optional<std::string> reference_summary) {
  if (document_texts.empty()) {
    throw FormatError("cluster " + id + ": empty documents array");
  }
  DocumentCluster cluster;
  cluster.id = std::move(id);
  cluster.reference_summary = std::move(reference_summary);
  int next_global = 0;
  for (std::size_t d = 0; d < document_texts.size(); ++d) {
    Document doc;
    doc.index = static_cast<int>(d);
    auto raw_sentences = split_sentences(document_texts[d]);
    if (raw_sentences.empty()) {
      throw FormatError("cluster " + cluster.id + ": document " + std::to_string(d) +
                        " has no sentences");
    }
    for (std::size_t s = 0; s < raw_sentences.size(); ++s) {
      Sentence sent;
      sent.doc_index = doc.index;
      sent.position = static_cast<int>(s) + 1;
      sent.global_id = next_global++;
      sent.raw_text = std::move(raw_sentences[s]);
      sent.tokens = annotate(sent.raw_text);
      if (sent.tokens.empty()) {
        throw FormatError("cluster " + cluster.id + ": empty sentence in document " +
                          std::to_string(d));
      }
      doc.sentences.push_back(std::move(sent));
    }
    cluster.documents.push_back(std::move(doc));
  }
  return cluster;
}

std::vector<DocumentCluster> load_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<DocumentCluster> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw FormatError(path.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("documents") || !obj["documents"].is_array()) {
      throw FormatError(path.string() + " line " + std::to_string(line_no) +
                        ": expected an object with a \"documents\" array");
    }
    std::vector<std::string> docs;
    for (const auto& d : obj["documents"]) {
      if (!d.is_string()) {
        throw FormatError(path.string() + " line " + std::to_string(line_no) +
                          ": \"documents\" entries must be strings");
      }
      docs.push_back(d.get<std::string>());
    }
    std::string id = obj.value("id", "cluster-" + std::to_string(line_no));
    std::optional<std::string> summary;
    if (obj.contains("summary") && obj["summary"].is_string()) {
      summary = obj["summary"].get<std::string>();
    }
    try {
      out.push_back(make_cluster(std::move(id), docs, std::move(summary)));
    } catch (const FormatError& e) {
      throw FormatError(path.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<DocumentCluster> load_directory(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw IoError(root.string() + " is not a directory");
  std::vector<fs::path> cluster_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) cluster_dirs.push_back(entry.path());
  }
  std::sort(cluster_dirs.begin(), cluster_dirs.end());
  std::vector<DocumentCluster> out;
  for (const auto& dir : cluster_dirs) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::string> docs;
    std::optional<std::string> summary;
    for (const auto& f : files) {
      std::ifstream in(f);
      if (!in) throw IoError("cannot open " + f.string());
      std::stringstream buf;
      buf << in.rdbuf();
      if (f.filename() == "summary.txt") {
        summary = buf.str();
      } else {
        docs.push_back(buf.str());
      }
    }
    if (docs.empty()) {
      throw FormatError("cluster directory " + dir.string() + " has no document files");
    }
    out.push_back(make_cluster(dir.filename().string(), docs, std::move(summary)));
  }
  return out;
}

std::string to_jsonl_line(const DocumentCluster& cluster) {
  json obj;
  obj["id"] = cluster.id;
  json docs = json::array();
  for (const auto& d : cluster.documents) {
    std::string text;
    for (const auto& s : d.sentences) {
      if (!text.empty()) text += ' ';
      text += s.raw_text;
    }
    docs.push_back(text);
  }
  obj["documents"] = std::move(docs);
  if (cluster.reference_summary) obj["summary"] = *cluster.reference_summary;
  return obj.dump();
}

CorpusStats corpus_stats(std::span<const DocumentCluster> dataset) {
  CorpusStats stats;
  stats.cluster_count = dataset.size();
  if (dataset.empty()) return stats;
  std::size_t doc_count = 0;
  std::size_t doc_tokens = 0;
  std::size_t summary_count = 0;
  std::size_t summary_tokens = 0;
  for (const auto& cluster : dataset) {
    doc_count += cluster.documents.size();
    for (const auto& d : cluster.documents) {
      for (const auto& s : d.sentences) doc_tokens += s.tokens.size();
    }
    if (cluster.reference_summary) {
      ++summary_count;
      summary_tokens += annotate(*cluster.reference_summary).size();
    }
  }
  stats.mean_docs_per_cluster = static_cast<double>(doc_count) / static_cast<double>(dataset.size());
  stats.mean_doc_tokens =
      doc_count == 0 ? 0.0 : static_cast<double>(doc_tokens) / static_cast<double>(doc_count);
  stats.mean_summary_tokens =
      summary_count == 0 ? 0.0
                         : static_cast<double>(summary_tokens) / static_cast<double>(summary_count);
  return stats;
}

}  // namespace mrgsum

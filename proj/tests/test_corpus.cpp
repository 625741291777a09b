#include <cstdio>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "mrgsum/corpus.hpp"
#include "mrgsum/errors.hpp"

using namespace mrgsum;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    path = std::filesystem::temp_directory_path() /
           ("mrgsum_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".jsonl");
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("split_sentences handles terminal punctuation") {
  CHECK(split_sentences("A dog ran. It barked!") ==
        std::vector<std::string>{"A dog ran.", "It barked!"});
  CHECK(split_sentences("Dr. Smith left.") == std::vector<std::string>{"Dr. Smith left."});
  CHECK(split_sentences("").empty());
  CHECK(split_sentences("   \t  ").empty());
  CHECK(split_sentences("A. B.") == std::vector<std::string>{"A.", "B."});
  CHECK(split_sentences("It hit at 4:30 p.m. saturday. Power failed.") ==
        std::vector<std::string>{"It hit at 4:30 p.m. saturday.", "Power failed."});
  CHECK(split_sentences("no terminal punctuation") ==
        std::vector<std::string>{"no terminal punctuation"});
  CHECK(split_sentences("Really?! Yes.") == std::vector<std::string>{"Really?!", "Yes."});
}

TEST_CASE("annotate tags the earthquake example") {
  const auto tokens = annotate("The earthquake struck.");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].lowered == "the");
  CHECK(tokens[0].pos == CoarsePos::Func);
  CHECK(tokens[0].is_stopword);
  CHECK(tokens[1].lowered == "earthquake");
  CHECK(tokens[1].pos == CoarsePos::Noun);
  CHECK(!tokens[1].is_stopword);
  CHECK(tokens[2].lowered == "struck");
  CHECK(tokens[2].pos == CoarsePos::Verb);
  CHECK(tokens[3].lowered == ".");
  CHECK(tokens[3].pos == CoarsePos::Punct);
}

TEST_CASE("annotate keeps numbers and hyphenated modifiers whole") {
  const auto num = annotate("30");
  REQUIRE(num.size() == 1);
  CHECK(num[0].pos == CoarsePos::Num);

  const auto quake = annotate("A 6.5-magnitude earthquake struck eureka");
  bool has_verb = false;
  bool has_magnitude_token = false;
  for (const auto& t : quake) {
    if (t.pos == CoarsePos::Verb) has_verb = true;
    if (t.lowered == "6.5-magnitude") has_magnitude_token = true;
  }
  CHECK(has_verb);
  CHECK(has_magnitude_token);
}

TEST_CASE("annotate separates leading and trailing punctuation") {
  const auto tokens = annotate("\"However,\" she said.");
  std::vector<std::string> lowered;
  for (const auto& t : tokens) lowered.push_back(t.lowered);
  CHECK(lowered == std::vector<std::string>{"\"", "however", ",", "\"", "she", "said", "."});
}

TEST_CASE("load_jsonl maps the documented schema") {
  TempFile file(R"({"documents":["A. B.","C."], "summary":"S."})" "\n");
  const auto clusters = load_jsonl(file.path);
  REQUIRE(clusters.size() == 1);
  const auto& c = clusters.front();
  REQUIRE(c.documents.size() == 2);
  CHECK(c.documents[0].sentence_count() == 2);
  CHECK(c.documents[1].sentence_count() == 1);
  CHECK(c.reference_summary == "S.");
  CHECK(c.total_sentences() == 3);
}

TEST_CASE("load_jsonl rejects malformed input with the line number") {
  SUBCASE("bad json") {
    TempFile file("{\"documents\":[\"A.\"]}\nnot json\n");
    CHECK_THROWS_WITH_AS(load_jsonl(file.path), doctest::Contains("line 2"), FormatError);
  }
  SUBCASE("empty documents array") {
    TempFile file(R"({"documents":[]})" "\n");
    CHECK_THROWS_AS(load_jsonl(file.path), FormatError);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(load_jsonl("/nonexistent/x.jsonl"), IoError); }
}

TEST_CASE("global ids are a bijection onto 0..n-1 in reading order") {
  const auto cluster =
      make_cluster("t", {"First one. Second one.", "Third one. Fourth one. Fifth one."}, {});
  const auto sentences = cluster.all_sentences();
  REQUIRE(sentences.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(sentences[static_cast<std::size_t>(i)]->global_id == i);
    CHECK(cluster.sentence(i).global_id == i);
  }
  // Positions are 1..N_i contiguous in every document.
  for (const auto& doc : cluster.documents) {
    for (int k = 0; k < doc.sentence_count(); ++k) {
      CHECK(doc.sentences[static_cast<std::size_t>(k)].position == k + 1);
    }
  }
}

TEST_CASE("jsonl round-trip preserves texts, positions and ids") {
  TempFile file(R"({"id":"rt","documents":["The quake hit. Power failed across town."],"summary":"Quake."})" "\n");
  const auto first = load_jsonl(file.path);
  REQUIRE(first.size() == 1);
  TempFile second_file(to_jsonl_line(first.front()) + "\n");
  const auto second = load_jsonl(second_file.path);
  REQUIRE(second.size() == 1);
  const auto a = first.front().all_sentences();
  const auto b = second.front().all_sentences();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i]->raw_text == b[i]->raw_text);
    CHECK(a[i]->position == b[i]->position);
    CHECK(a[i]->global_id == b[i]->global_id);
  }
  CHECK(first.front().reference_summary == second.front().reference_summary);
}

TEST_CASE("corpus_stats computes simple means") {
  const auto cluster = make_cluster("s", {"alpha beta gamma delta epsilon"}, {});
  const CorpusStats stats = corpus_stats(std::vector<DocumentCluster>{cluster});
  CHECK(stats.cluster_count == 1);
  CHECK(stats.mean_docs_per_cluster == doctest::Approx(1.0));
  CHECK(stats.mean_doc_tokens == doctest::Approx(5.0));
  CHECK(stats.mean_summary_tokens == 0.0);

  const auto with_summary = make_cluster("t", {"One two. Three four.", "Five six."}, "ref words");
  const CorpusStats both =
      corpus_stats(std::vector<DocumentCluster>{cluster, with_summary});
  CHECK(both.cluster_count == 2);
  CHECK(both.mean_docs_per_cluster == doctest::Approx(1.5));
  CHECK(both.mean_summary_tokens == doctest::Approx(2.0));
}

TEST_CASE("directory loader reads DUC-style layouts") {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "mrgsum_dir_test";
  fs::remove_all(root);
  fs::create_directories(root / "c1");
  std::ofstream(root / "c1" / "doc_a.txt") << "First story sentence. Another one.";
  std::ofstream(root / "c1" / "doc_b.txt") << "Second document text.";
  std::ofstream(root / "c1" / "summary.txt") << "Reference.";
  const auto clusters = load_directory(root);
  fs::remove_all(root);
  REQUIRE(clusters.size() == 1);
  CHECK(clusters.front().id == "c1");
  CHECK(clusters.front().documents.size() == 2);
  CHECK(clusters.front().reference_summary == "Reference.");
}

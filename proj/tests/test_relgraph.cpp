#include <cmath>
#include <sstream>

#include <doctest.h>

#include "mrgsum/errors.hpp"
#include "mrgsum/relgraph.hpp"
#include "support/test_support.hpp"

using namespace mrgsum;
using namespace mrgsum::testsupport;

TEST_CASE("tfidf gives identical vectors to identical sentences") {
  const auto cluster = make_cluster("t", {"The quake hit town. The quake hit town."}, {});
  const auto vectors = tfidf_vectors(cluster);
  REQUIRE(vectors.by_sentence.size() == 2);
  CHECK(vectors.by_sentence[0].entries == vectors.by_sentence[1].entries);
}

TEST_CASE("a term present in every sentence gets idf 1") {
  const auto cluster = make_cluster("t", {"quake power. quake town. quake damage."}, {});
  const auto vectors = tfidf_vectors(cluster);
  const int term = vectors.terms.lookup("quake");
  REQUIRE(term >= 0);
  for (const auto& vec : vectors.by_sentence) {
    for (const auto& [id, w] : vec.entries) {
      if (id == term) CHECK(w == doctest::Approx(1.0));  // tf 1 * (ln(1) + 1)
    }
  }
}

TEST_CASE("all-stopword sentences get empty vectors") {
  const auto cluster = make_cluster("t", {"It was. The quake hit."}, {});
  const auto vectors = tfidf_vectors(cluster);
  CHECK(vectors.by_sentence[0].empty());
  CHECK(!vectors.by_sentence[1].empty());
}

TEST_CASE("cosine follows the hand-computed cases") {
  SparseVector a{{{0, 1.0}}};
  SparseVector b{{{0, 1.0}, {1, 1.0}}};
  SparseVector empty;
  CHECK(cosine(a, a) == doctest::Approx(1.0));
  CHECK(cosine(a, b) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(cosine(a, empty) == 0.0);
  SparseVector c{{{1, 2.0}}};
  CHECK(cosine(a, c) == 0.0);
}

TEST_CASE("semantic edges appear only above tau") {
  TfidfVectors vectors;
  vectors.by_sentence = {SparseVector{{{0, 1.0}}}, SparseVector{{{0, 1.0}, {1, 1.0}}},
                         SparseVector{{{2, 3.0}}}};
  const auto edges = semantic_edges(vectors, 0.1);
  CHECK(edges.node_count == 3);
  REQUIRE(edges.edges.size() == 1);
  const auto& [pair, w] = *edges.edges.begin();
  CHECK(pair == std::make_pair(0, 1));
  CHECK(w == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  // tau at the exact cosine value excludes the edge (strict >).
  const auto strict = semantic_edges(vectors, 1.0 / std::sqrt(2.0));
  CHECK(strict.edges.empty());

  // tau = 0 yields a superset of any positive tau.
  const auto loose = semantic_edges(vectors, 0.0);
  for (const auto& [p, _] : strict.edges) CHECK(loose.edges.count(p) == 1);
}

TEST_CASE("discourse markers link consecutive sentences") {
  const auto cluster =
      make_cluster("t", {"The quake hit town. However, power stayed on."}, {});
  const auto edges = discourse_edges(cluster);
  REQUIRE(edges.edges.count({0, 1}) == 1);
  CHECK(edges.edges.at({0, 1}) == 1.0);
}

TEST_CASE("leading pronouns link to the preceding sentence") {
  const auto cluster = make_cluster("t", {"A resident spoke on friday. She described damage."}, {});
  const auto edges = discourse_edges(cluster);
  REQUIRE(edges.edges.count({0, 1}) == 1);
  CHECK(edges.edges.at({0, 1}) == 1.0);
}

TEST_CASE("shared nouns weigh by jaccard overlap") {
  // Noun sets {earthquake, power} and {earthquake, eureka}: jaccard 1/3.
  const auto cluster = make_cluster(
      "t", {"earthquake cut power.", "earthquake shook eureka."}, {});
  DiscourseOptions only_entities;
  only_entities.markers = false;
  only_entities.pronouns = false;
  const auto edges = discourse_edges(cluster, only_entities);
  REQUIRE(edges.edges.count({0, 1}) == 1);
  CHECK(edges.edges.at({0, 1}) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("sentences with nothing in common get no discourse edge") {
  const auto cluster = make_cluster("t", {"earthquake shook town.", "senate passed budget."}, {});
  DiscourseOptions only_entities;
  only_entities.markers = false;
  only_entities.pronouns = false;
  const auto edges = discourse_edges(cluster, only_entities);
  CHECK(edges.edges.empty());
}

TEST_CASE("integrate takes the elementwise max") {
  TypedEdgeSet a{Relation::Semantic, 3, {}};
  TypedEdgeSet b{Relation::Discourse, 3, {}};
  a.add_max(0, 1, 0.5);
  b.add_max(0, 1, 1.0);
  a.add_max(1, 2, 0.5);
  const auto graph = integrate(a, b);
  CHECK(graph.edge_weight(0, 1) == 1.0);
  CHECK(graph.edge_weight(1, 2) == 0.5);
  CHECK(graph.edge_weight(0, 2) == 0.0);
  CHECK(graph.degree(1) == doctest::Approx(1.5));
  CHECK(graph.total_volume() == doctest::Approx(3.0));

  // Commutative, and idempotent when both sides agree.
  const auto swapped = integrate(b, a);
  CHECK(swapped.edge_weight(0, 1) == 1.0);
  CHECK(swapped.total_volume() == doctest::Approx(graph.total_volume()));
  const auto self = integrate(a, a);
  CHECK(self.edge_weight(0, 1) == 0.5);
}

TEST_CASE("integrate rejects mismatched node universes") {
  TypedEdgeSet a{Relation::Semantic, 3, {}};
  TypedEdgeSet b{Relation::Discourse, 4, {}};
  CHECK_THROWS_AS(integrate(a, b), FormatError);
}

TEST_CASE("volume is twice the edge weight sum") {
  std::mt19937_64 rng(777);
  const auto graph = random_graph(rng, 12, 0.4);
  double edge_sum = 0.0;
  graph.for_each_edge([&](NodeId, NodeId, double w) { edge_sum += w; });
  CHECK(graph.total_volume() == doctest::Approx(2.0 * edge_sum).epsilon(1e-9));
}

TEST_CASE("edge list round-trips through the text format") {
  std::mt19937_64 rng(31);
  const auto graph = random_graph(rng, 9, 0.5);
  std::stringstream buffer;
  write_edge_list(buffer, graph);
  const auto back = read_edge_list(buffer);
  CHECK(back.node_count() == graph.node_count());
  CHECK(back.total_volume() == doctest::Approx(graph.total_volume()).epsilon(1e-12));
  graph.for_each_edge([&](NodeId i, NodeId j, double w) {
    CHECK(back.edge_weight(i, j) == doctest::Approx(w).epsilon(1e-12));
  });
}

TEST_CASE("edge list parser names bad lines") {
  std::stringstream bad_header("#vertices 3\n");
  CHECK_THROWS_AS(read_edge_list(bad_header), FormatError);
  std::stringstream bad_line("#nodes 3\n0 1 not_a_weight\n");
  CHECK_THROWS_WITH_AS(read_edge_list(bad_line), doctest::Contains("line 2"), FormatError);
  std::stringstream self_loop("#nodes 3\n1 1 0.5\n");
  CHECK_THROWS_AS(read_edge_list(self_loop), FormatError);
}

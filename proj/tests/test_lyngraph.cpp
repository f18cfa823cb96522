#include <random>

#include "doctest.h"
#include "lyn/error.hpp"
#include "lyn/lyndon.hpp"
#include "lyn/lyngraph.hpp"
#include "oracles.hpp"

using namespace lyn;

namespace {
Word w3(const char* s) { return Word::parse(s, 3); }
using Parts = std::vector<std::vector<Vertex>>;
}  // namespace

TEST_CASE("build_lyndon_graph reproduces the abccab figure") {
  const auto g = build_lyndon_graph(w3("abccab")).graph;
  const std::vector<Edge> expected{{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {5, 6}};
  CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expected);
  CHECK(g.order() == 6);
}

TEST_CASE("build_lyndon_graph small cases") {
  CHECK(build_lyndon_graph(w3("cba")).graph == Graph(3));
  CHECK(build_lyndon_graph(w3("abc")).graph == complete_graph(3));
  CHECK(build_lyndon_graph(w3("")).graph == Graph(0));
}

TEST_CASE("edges are exactly the ascent pairs") {
  for (int n : {1, 2, 3}) {
    for (std::size_t len = 0; len <= 8; ++len) {
      for (const auto& w : oracle::all_words(n, len)) {
        const auto g = build_lyndon_graph(w).graph;
        std::size_t ascents = 0;
        for (std::size_t i = 0; i < len; ++i) {
          for (std::size_t j = i + 1; j < len; ++j) {
            const bool ascent = w[i] < w[j];
            ascents += ascent;
            REQUIRE(g.has_edge(static_cast<int>(i + 1), static_cast<int>(j + 1)) == ascent);
          }
        }
        REQUIRE(g.edge_count() == ascents);
      }
    }
  }
}

TEST_CASE("components") {
  CHECK(components(build_lyndon_graph(w3("abccab")).graph) == Parts{{1, 2, 3, 4, 5, 6}});
  CHECK(components(build_lyndon_graph(w3("ba")).graph) == Parts{{1}, {2}});
  CHECK(components(build_lyndon_graph(w3("cba")).graph) == Parts{{1}, {2}, {3}});
  CHECK(components(Graph(4, {{1, 4}, {2, 3}})) == Parts{{1, 4}, {2, 3}});
  CHECK(is_connected(Graph(1)));
  CHECK_FALSE(is_connected(Graph(0)));
}

TEST_CASE("nontrivial_component_count") {
  CHECK(nontrivial_component_count(build_lyndon_graph(w3("abccab")).graph) == 1);
  CHECK(nontrivial_component_count(Graph(5)) == 0);
  CHECK(nontrivial_component_count(Graph(4, {{1, 2}, {3, 4}})) == 2);
}

TEST_CASE("letter_partition") {
  CHECK(letter_partition(w3("abccab")) == Parts{{1, 5}, {2, 6}, {3, 4}});
  CHECK(letter_partition(w3("abc")) == Parts{{1}, {2}, {3}});
  CHECK(letter_partition(w3("aaa")) == Parts{{1, 2, 3}, {}, {}});
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& w : oracle::all_words(3, len)) {
      const auto g = build_lyndon_graph(w).graph;
      std::size_t covered = 0;
      for (const auto& part : letter_partition(w)) {
        REQUIRE(is_independent_set(g, part));
        covered += part.size();
      }
      REQUIRE(covered == len);
    }
  }
}

TEST_CASE("degree_sum_pair") {
  CHECK(degree_sum_pair(build_lyndon_graph(w3("ab")).graph) == Edge{1, 2});
  const auto c4 = build_lyndon_graph(Word::parse("aabb")).graph;
  CHECK(std::vector<Edge>(c4.edges().begin(), c4.edges().end()) ==
        std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(degree_sum_pair(c4) == Edge{1, 3});
  CHECK_FALSE(degree_sum_pair(complete_graph(3)).has_value());
}

TEST_CASE("enumerate_simple_cycles") {
  CHECK(enumerate_simple_cycles(cycle_graph(4), 3).size() == 1);
  CHECK(enumerate_simple_cycles(complete_graph(3), 3).size() == 1);
  const auto k4 = enumerate_simple_cycles(complete_graph(4), 3);
  CHECK(k4.size() == 7);
  CHECK(std::count_if(k4.begin(), k4.end(), [](const Cycle& c) { return c.size() == 3; }) == 4);
  for (const auto& c : k4) {
    CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    CHECK(c[1] < c.back());
  }
  CHECK_THROWS_AS(enumerate_simple_cycles(Graph(13), 3), BoundExceeded);
  CHECK_NOTHROW(enumerate_simple_cycles(Graph(13), 3, 13));
}

TEST_CASE("cycle enumeration matches brute force on every 5-vertex graph") {
  for (const auto& g : oracle::all_graphs(5)) {
    const auto got = enumerate_simple_cycles(g, 3);
    REQUIRE(got.size() == oracle::cycles(g, 3).size());
    std::set<std::vector<int>> normalized;
    for (auto c : got) {
      auto best = c;
      for (int flip = 0; flip < 2; ++flip) {
        auto d = c;
        if (flip) std::reverse(d.begin(), d.end());
        for (std::size_t r = 0; r < d.size(); ++r) {
          std::rotate(d.begin(), d.begin() + 1, d.end());
          best = std::min(best, d);
        }
      }
      normalized.insert(best);
    }
    REQUIRE(normalized == oracle::cycles(g, 3));
  }
}

TEST_CASE("is_rs_chordal") {
  CHECK_FALSE(is_rs_chordal(cycle_graph(6), 6, 3));
  CHECK(is_rs_chordal(complete_graph(3), 6, 3));
  CHECK_FALSE(is_rs_chordal(complete_graph(4), 3, 1));
  CHECK(is_rs_chordal(complete_graph(4), 4, 1));
  CHECK_THROWS_AS(is_rs_chordal(complete_graph(3), 3, 3), InvalidArgument);
  CHECK_THROWS_AS(is_rs_chordal(complete_graph(3), 3, 0), InvalidArgument);
  // A 6-cycle with the three long diagonals has 3 chords.
  Graph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}, {2, 5}, {3, 6}});
  CHECK(chord_count(g, Cycle{1, 2, 3, 4, 5, 6}) == 3);
}

TEST_CASE("induced_subgraph") {
  const auto g = build_lyndon_graph(w3("abccab")).graph;
  CHECK(induced_subgraph(g, std::vector<Vertex>{1, 2, 3}) == complete_graph(3));
  CHECK(induced_subgraph(g, std::vector<Vertex>{}) == Graph(0));
  CHECK(induced_subgraph(g, std::vector<Vertex>{1, 2, 3, 4, 5, 6}) == g);
  CHECK_THROWS_AS(induced_subgraph(g, std::vector<Vertex>{7}), InvalidArgument);
}

TEST_CASE("induced subgraph commutes with taking the scattered subword") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t len = rng() % 13;
    std::vector<Letter> letters(len);
    for (auto& a : letters) a = static_cast<Letter>(rng() % 3);
    const Word w(Alphabet(3), letters);
    std::vector<Vertex> s;
    for (std::size_t i = 1; i <= len; ++i)
      if (rng() % 2) s.push_back(static_cast<Vertex>(i));
    REQUIRE(induced_subgraph(build_lyndon_graph(w).graph, s) ==
            build_lyndon_graph(subword_at(w, s)).graph);
  }
}

TEST_CASE("Lyndon words give connected graphs") {
  for (const auto& l : generate_lyndon(2, 12)) REQUIRE(is_connected(build_lyndon_graph(l).graph));
  for (const auto& l : generate_lyndon(3, 9)) REQUIRE(is_connected(build_lyndon_graph(l).graph));
}

TEST_CASE("strictly decreasing factorizations have at least as many factors as components") {
  for (int n : {2, 3}) {
    for (std::size_t len = 1; len <= 10; ++len) {
      for (const auto& w : oracle::all_words(n, len)) {
        const auto f = cfl_factorize(w);
        if (!f.strictly_decreasing()) continue;
        REQUIRE(f.factors.size() >= components(build_lyndon_graph(w).graph).size());
      }
    }
  }
}

TEST_CASE("graph JSON and DOT") {
  const auto g = build_lyndon_graph(w3("abccab"));
  CHECK(graph_to_json(g.graph) ==
        R"({"edges":[[1,2],[1,3],[1,4],[1,6],[2,3],[2,4],[5,6]],"order":6})");
  CHECK(graph_from_json(graph_to_json(g.graph)) == g.graph);
  CHECK(graph_from_json(R"({"order": 3, "edges": [[3, 1]]})") == Graph(3, {{1, 3}}));
  CHECK_THROWS_AS(graph_from_json("{"), InvalidArgument);
  CHECK_THROWS_AS(graph_from_json(R"({"order": 2, "edges": [[1, 1]]})"), InvalidArgument);
  CHECK_THROWS_AS(graph_from_json(R"({"order": 2, "edges": [[1, 2], [2, 1]]})"), InvalidArgument);
  CHECK_THROWS_AS(graph_from_json(R"({"order": 2, "edges": [[1, 3]]})"), InvalidArgument);
  const auto dot = graph_to_dot(g.graph, &g.word);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("[label=\"5:a\"]") != std::string::npos);
}

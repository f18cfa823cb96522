#include <random>

#include "doctest.h"
#include "lyn/error.hpp"
#include "lyn/lyngraph.hpp"
#include "lyn/represent.hpp"
#include "oracles.hpp"

using namespace lyn;

TEST_CASE("are_isomorphic") {
  const Graph k3 = complete_graph(3);
  const auto phi = are_isomorphic(k3, oracle::relabel(k3, {3, 1, 2}));
  CHECK(phi.has_value());
  CHECK_FALSE(are_isomorphic(cycle_graph(4), path_graph(4)).has_value());
  CHECK(are_isomorphic(build_lyndon_graph(Word::parse("ab", 3)).graph,
                       build_lyndon_graph(Word::parse("ac", 3)).graph)
            .has_value());
  CHECK_THROWS_AS(are_isomorphic(Graph(11), Graph(11)), BoundExceeded);

  // The returned bijection is an isomorphism.
  const Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
  const Graph h = oracle::relabel(g, {4, 2, 5, 1, 3});
  const auto map = are_isomorphic(g, h);
  REQUIRE(map.has_value());
  for (auto [u, v] : g.edges()) {
    CHECK(h.has_edge((*map)[static_cast<std::size_t>(u - 1)],
                     (*map)[static_cast<std::size_t>(v - 1)]));
  }
}

TEST_CASE("are_isomorphic agrees with the permutation oracle") {
  std::mt19937 rng(5);
  for (int order = 1; order <= 6; ++order) {
    const auto graphs = oracle::all_graphs(order);
    for (int trial = 0; trial < 400; ++trial) {
      const auto& g = graphs[rng() % graphs.size()];
      const auto& h = graphs[rng() % graphs.size()];
      REQUIRE(are_isomorphic(g, h).has_value() == oracle::isomorphic(g, h));
    }
  }
}

TEST_CASE("canonical_form is invariant under relabelling") {
  const Graph c4 = cycle_graph(4);
  const auto form = canonical_form(c4);
  std::vector<int> perm{1, 2, 3, 4};
  do {
    CHECK(canonical_form(oracle::relabel(c4, perm)) == form);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(canonical_form(path_graph(4)) != form);
  CHECK(canonical_form(canonical_graph(c4)) == form);
  CHECK_THROWS_AS(canonical_form(Graph(11)), BoundExceeded);

  std::mt19937 rng(3);
  for (const Graph& g : {cycle_graph(10), complete_graph(8), Graph(10), path_graph(9)}) {
    std::vector<int> p(static_cast<std::size_t>(g.order()));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(canonical_form(oracle::relabel(g, p)) == canonical_form(g));
  }
}

TEST_CASE("certificates collide exactly for isomorphic graphs up to order 6") {
  const std::size_t expected_classes[] = {0, 1, 2, 4, 11, 34, 156};
  for (int order = 1; order <= 6; ++order) {
    std::map<CanonicalForm, Graph> reps;
    for (const auto& g : oracle::all_graphs(order)) {
      auto form = canonical_form(g);
      auto [it, inserted] = reps.emplace(form, g);
      if (!inserted) REQUIRE(are_isomorphic(g, it->second).has_value());
    }
    REQUIRE(reps.size() == expected_classes[order]);
    std::vector<Graph> list;
    for (auto& [f, g] : reps) list.push_back(g);
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b)
        REQUIRE_FALSE(are_isomorphic(list[a], list[b]).has_value());
  }
}

TEST_CASE("connected_graph_classes counts") {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112};
  for (int order = 1; order <= 6; ++order) {
    CHECK(connected_graph_classes(order).size() == expected[order]);
  }
  CHECK_THROWS_AS(connected_graph_classes(7), BoundExceeded);
}

TEST_CASE("find_representing_word") {
  auto k2 = find_representing_word(complete_graph(2), 2);
  CHECK(k2.verdict == Verdict::kRepresentable);
  CHECK(k2.witness->str() == "ab");
  CHECK(k2.words_examined == 2);

  auto k3 = find_representing_word(complete_graph(3), 3);
  CHECK(k3.witness->str() == "abc");

  auto c6 = find_representing_word(cycle_graph(6), 3);
  CHECK(c6.verdict == Verdict::kNotRepresentable);
  CHECK(c6.words_examined == 729);

  auto c4 = find_representing_word(cycle_graph(4), 2);
  REQUIRE(c4.verdict == Verdict::kRepresentable);
  CHECK(c4.witness->str() == "aabb");

  // "aab" precedes "acb" and already yields P3 (edges 13, 23).
  auto p3 = find_representing_word(path_graph(3), 3);
  CHECK(p3.witness->str() == "aab");
  CHECK(are_isomorphic(build_lyndon_graph(Word::parse("acb")).graph, path_graph(3)));

  SearchOptions tight;
  tight.max_words = 100;
  CHECK(find_representing_word(cycle_graph(6), 3, tight).verdict == Verdict::kBoundExceeded);
}

TEST_CASE("serial and parallel searches agree") {
  SearchOptions serial;
  serial.parallel = false;
  for (int order = 1; order <= 5; ++order) {
    for (const auto& g : connected_graph_classes(order)) {
      auto a = find_representing_word(g, 3);
      auto b = find_representing_word(g, 3, serial);
      REQUIRE(a.verdict == b.verdict);
      REQUIRE(a.witness == b.witness);
      REQUIRE(a.words_examined == b.words_examined);
      if (a.witness) {
        REQUIRE(are_isomorphic(build_lyndon_graph(*a.witness).graph, g).has_value());
      }
    }
  }
}

TEST_CASE("not-representable verdicts survive a shuffled scan") {
  std::mt19937 rng(99);
  for (const Graph& g : {cycle_graph(6), cycle_graph(5), complete_graph(4)}) {
    REQUIRE(find_representing_word(g, 3).verdict == Verdict::kNotRepresentable);
    auto words = oracle::all_words(3, static_cast<std::size_t>(g.order()));
    std::shuffle(words.begin(), words.end(), rng);
    for (const auto& w : words) {
      REQUIRE_FALSE(oracle::isomorphic(build_lyndon_graph(w).graph, g));
    }
  }
}

TEST_CASE("classify_words") {
  auto sizes = [](const std::map<CanonicalForm, std::vector<Word>>& m) {
    std::multiset<std::size_t> s;
    for (const auto& [f, ws] : m) s.insert(ws.size());
    return s;
  };
  const auto c22 = classify_words(2, 2);
  CHECK(sizes(c22) == std::multiset<std::size_t>{1, 3});
  CHECK(c22.at(canonical_form(complete_graph(2))).front().str() == "ab");
  CHECK(sizes(classify_words(1, 3)) == std::multiset<std::size_t>{3});
  const auto c23 = classify_words(2, 3);
  CHECK(sizes(c23) == std::multiset<std::size_t>{3, 6});
  std::vector<std::string> k2;
  for (const auto& w : c23.at(canonical_form(complete_graph(2)))) k2.push_back(w.str());
  CHECK(k2 == std::vector<std::string>{"ab", "ac", "bc"});

  SearchOptions serial;
  serial.parallel = false;
  CHECK(classify_words(6, 3) == classify_words(6, 3, serial));
  CHECK_THROWS_AS(classify_words(9, 3, SearchOptions{1000, true}), BoundExceeded);
}

TEST_CASE("order-preserving letter maps leave the Lyndon graph unchanged") {
  // Each map sends the used letters of a word into {a,b,c} preserving order.
  for (std::size_t len = 1; len <= 5; ++len) {
    for (const auto& w : oracle::all_words(3, len)) {
      std::vector<Letter> used;
      for (Letter a = 0; a < 3; ++a)
        if (letter_count(w, a)) used.push_back(a);
      // Enumerate strictly increasing images of `used` in {0,1,2}.
      for (int mask = 0; mask < 8; ++mask) {
        std::vector<Letter> image;
        for (Letter a = 0; a < 3; ++a)
          if ((mask >> a) & 1) image.push_back(a);
        if (image.size() != used.size()) continue;
        std::vector<Letter> mapped;
        for (Letter a : w.letters()) {
          const auto idx = std::find(used.begin(), used.end(), a) - used.begin();
          mapped.push_back(image[static_cast<std::size_t>(idx)]);
        }
        REQUIRE(build_lyndon_graph(Word(Alphabet(3), mapped)).graph ==
                build_lyndon_graph(w).graph);
      }
    }
  }
}

TEST_CASE("theorem3_predicate") {
  const auto k2 = theorem3_predicate(complete_graph(2));
  CHECK(k2.connected);
  CHECK(k2.tripartite);
  CHECK(k2.chordal63);
  CHECK(k2.degree_sum_pair);
  CHECK(k2.all);

  const auto c6 = theorem3_predicate(cycle_graph(6));
  CHECK(c6.connected);
  CHECK(c6.tripartite);
  CHECK_FALSE(c6.chordal63);
  CHECK_FALSE(c6.degree_sum_pair);
  CHECK_FALSE(c6.all);

  const auto k3 = theorem3_predicate(complete_graph(3));
  CHECK(k3.connected);
  CHECK(k3.tripartite);
  CHECK(k3.chordal63);
  CHECK_FALSE(k3.degree_sum_pair);

  CHECK_FALSE(is_tripartite(complete_graph(4)));
  CHECK(is_tripartite(cycle_graph(5)));
}

TEST_CASE("audit_theorem3") {
  const auto two = audit_theorem3(2, 3);
  REQUIRE(two.rows.size() == 1);
  CHECK(two.rows[0].agrees());
  CHECK(two.mismatches().empty());

  const auto three = audit_theorem3(3, 3);
  REQUIRE(three.rows.size() == 3);  // K2, P3, K3
  const auto bad = three.mismatches();
  REQUIRE(bad.size() == 1);
  CHECK(bad[0]->form == canonical_form(complete_graph(3)));
  CHECK(bad[0]->witness->str() == "abc");
  for (const auto& row : three.rows) {
    if (row.form == canonical_form(path_graph(3))) {
      CHECK(row.agrees());
      CHECK(row.witness->str() == "aab");
    }
  }
  CHECK(audit_theorem3(3, 3).to_json() == three.to_json());

  AuditOptions with_single;
  with_single.min_order = 1;
  CHECK(audit_theorem3(2, 3, with_single).mismatches().size() == 1);
}

#include "doctest.h"
#include "lyn/error.hpp"
#include "lyn/lyndon.hpp"
#include "oracles.hpp"

using namespace lyn;

namespace {
Word w3(const char* s) { return Word::parse(s, 3); }
std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}
}  // namespace

TEST_CASE("is_lyndon") {
  CHECK(is_lyndon(w3("aab")));
  CHECK_FALSE(is_lyndon(w3("aa")));
  CHECK_FALSE(is_lyndon(w3("ba")));
  CHECK(is_lyndon(w3("abcc")));
  CHECK_THROWS_AS(is_lyndon(w3("")), InvalidArgument);
}

TEST_CASE("cfl_factorize examples") {
  CHECK(strs(cfl_factorize(w3("abccab")).factors) == std::vector<std::string>{"abcc", "ab"});
  CHECK(strs(cfl_factorize(w3("cba")).factors) == std::vector<std::string>{"c", "b", "a"});
  CHECK(strs(cfl_factorize(w3("aaa")).factors) == std::vector<std::string>{"a", "a", "a"});
  CHECK(cfl_factorize(w3("")).factors.empty());
  CHECK(cfl_factorize(w3("abccab")).str() == "abcc·ab");
}

TEST_CASE("cfl_oracle examples and bound") {
  CHECK(strs(cfl_oracle(w3("abccab")).factors) == std::vector<std::string>{"abcc", "ab"});
  CHECK(strs(cfl_oracle(w3("ba")).factors) == std::vector<std::string>{"b", "a"});
  CHECK(strs(cfl_oracle(w3("ab")).factors) == std::vector<std::string>{"ab"});
  CHECK_THROWS_AS(cfl_oracle(Word::parse("aaaaaaaaaaaaaaa")), BoundExceeded);
  CHECK_NOTHROW(cfl_oracle(Word::parse("aaaaaaaaaaaaaaa"), 15));
}

TEST_CASE("cfl_factorize agrees with the exhaustive oracle") {
  auto check_all = [](int n, std::size_t max_len) {
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (const auto& w : oracle::all_words(n, len)) {
        const auto f = cfl_factorize(w);
        Word joined(w.alphabet());
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
          REQUIRE(is_lyndon(f.factors[i]));
          if (i) REQUIRE(lex_compare(f.factors[i - 1], f.factors[i]) >= 0);
          joined = joined.concat(f.factors[i]);
        }
        REQUIRE(joined == w);
        REQUIRE(f == cfl_oracle(w));
        if (!w.empty()) REQUIRE(is_lyndon(w) == (f.factors.size() == 1));
      }
    }
  };
  check_all(2, 10);
  check_all(3, 8);
}

TEST_CASE("standard factorization") {
  auto sf = [](const char* s) {
    auto [r, t] = standard_factorization(w3(s));
    return std::make_pair(r.str(), t.str());
  };
  CHECK(sf("aab") == std::make_pair(std::string("a"), std::string("ab")));
  CHECK(sf("abcc") == std::make_pair(std::string("a"), std::string("bcc")));
  CHECK(sf("ab") == std::make_pair(std::string("a"), std::string("b")));
  CHECK_THROWS_AS(standard_factorization(w3("a")), InvalidArgument);
  CHECK_THROWS_AS(standard_factorization(w3("ba")), InvalidArgument);

  for (int n : {2, 3}) {
    for (const auto& l : generate_lyndon(n, 10)) {
      if (l.size() < 2) continue;
      auto [r, s] = standard_factorization(l);
      const Word rs = r.concat(s);
      REQUIRE(rs == l);
      REQUIRE(is_lyndon(r));
      REQUIRE(is_lyndon(s));
      REQUIRE(lex_compare(r, rs) < 0);
      REQUIRE(lex_compare(rs, s) < 0);
    }
  }
}

TEST_CASE("generate_lyndon") {
  CHECK(strs(generate_lyndon(2, 2)) == std::vector<std::string>{"a", "ab", "b"});
  CHECK(strs(generate_lyndon(2, 3)) ==
        std::vector<std::string>{"a", "aab", "ab", "abb", "b"});
  CHECK(strs(generate_lyndon(1, 3)) == std::vector<std::string>{"a"});

  // Oracle: filter every word through the definition, then sort.
  for (int n : {1, 2, 3}) {
    const std::size_t max_len = n == 3 ? 7 : 10;
    std::vector<Word> expected;
    for (std::size_t len = 1; len <= max_len; ++len)
      for (const auto& w : oracle::all_words(n, len))
        if (is_lyndon(w)) expected.push_back(w);
    std::sort(expected.begin(), expected.end());
    CHECK(generate_lyndon(n, max_len) == expected);
  }
}

TEST_CASE("witt_count") {
  CHECK(witt_count(2, 1) == 2);
  CHECK(witt_count(2, 3) == 2);
  CHECK(witt_count(3, 2) == 3);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(9973) == -1);
  for (int n : {1, 2, 3}) {
    const auto words = generate_lyndon(n, 12);
    for (std::uint64_t d = 1; d <= 12; ++d) {
      const auto slice = std::count_if(words.begin(), words.end(),
                                       [&](const Word& w) { return w.size() == d; });
      CHECK(witt_count(n, d) == static_cast<long>(slice));
    }
  }
}

#include "doctest.h"
#include "lyn/claims.hpp"
#include "lyn/error.hpp"
#include "lyn/lyngraph.hpp"
#include "oracles.hpp"

using namespace lyn;

namespace {

ClaimBounds bounds(int n, std::size_t max_length) {
  ClaimBounds b;
  b.alphabet_size = n;
  b.max_length = max_length;
  return b;
}

bool has_word(const ClaimReport& r, const std::string& word) {
  for (const auto& c : r.counterexamples) {
    if (c.instance.value("word", "") == word) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("registry") {
  std::set<std::string> ids;
  for (const auto& c : list_claims()) ids.insert(c.id);
  CHECK(ids.contains("L7-lyndon-connected"));
  CHECK(ids.contains("C1-coin-identity"));
  CHECK(ids.contains("T3-characterization"));
  CHECK(ids.size() == list_claims().size());
  CHECK_THROWS_AS(run_claim("nope"), InvalidArgument);
}

TEST_CASE("L7 holds on binary words to length 10") {
  const auto r = run_claim("L7-lyndon-connected", bounds(2, 10));
  CHECK(r.status() == ClaimStatus::kNoCounterexample);
  std::uint64_t lyndon = 0;
  for (const auto& l : generate_lyndon(2, 10)) lyndon += l.size() >= 1;
  CHECK(r.instances_checked == lyndon);
}

TEST_CASE("L8 literal reading fails first on ba") {
  auto b = bounds(2, 4);
  b.min_length = 2;
  const auto r = run_claim("L8-concat-connected", b);
  REQUIRE(r.status() == ClaimStatus::kCounterexamplesFound);
  const auto& first = r.counterexamples.front().instance;
  CHECK(first["l_s"] == "b");
  CHECK(first["l_r"] == "a");
  CHECK(first["word"] == "ba");
}

TEST_CASE("L2 literal reading fails on abc") {
  const auto r = run_claim("L2-degree-sum", bounds(3, 4));
  CHECK(r.status() == ClaimStatus::kCounterexamplesFound);
  CHECK(has_word(r, "abc"));
}

TEST_CASE("C1 holds for strict-decreasing raw counts, fails otherwise") {
  auto b = bounds(2, 10);
  b.interpretation = Interpretation::kStrictDecreasing;
  b.convention_k0 = false;
  CHECK(run_claim("C1-coin-identity", b).status() == ClaimStatus::kNoCounterexample);

  b.convention_k0 = true;
  const auto conv = run_claim("C1-coin-identity", b);
  CHECK(conv.status() == ClaimStatus::kCounterexamplesFound);
  CHECK(conv.violations == 9);

  b.convention_k0 = false;
  b.interpretation = Interpretation::kDistinctCount;
  CHECK(run_claim("C1-coin-identity", b).status() == ClaimStatus::kCounterexamplesFound);
}

TEST_CASE("T3 reports the K3 mismatch") {
  const auto r = run_claim("T3-characterization", bounds(3, 3));
  REQUIRE(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].violation.find("via abc") != std::string::npos);
  CHECK(r.instances_checked == 3);
}

TEST_CASE("claims without literal-reading problems pass") {
  for (const char* id : {"T1-cfl-unique", "P1-standard-factorization", "R1-binary-parikh",
                         "P-tri-partition", "COR-induced-hereditary", "P-comp-components",
                         "Q1-component-subword", "C2-real-roots", "Q2-uniform-tables",
                         "Q4-comp-equality"}) {
    CAPTURE(id);
    ClaimBounds b;
    b.max_length = std::string(id) == "COR-induced-hereditary" ? 5 : 6;
    if (std::string(id) == "Q2-uniform-tables") b.max_length = 2;
    const auto r = run_claim(id, b);
    CHECK(r.status() == ClaimStatus::kNoCounterexample);
    CHECK(r.instances_checked > 0);
  }
}

TEST_CASE("general-word component count fails on aa") {
  const auto r = run_claim("P-comp-general", bounds(3, 4));
  CHECK(r.status() == ClaimStatus::kCounterexamplesFound);
  CHECK(has_word(r, "aa"));
}

TEST_CASE("counterexample cap keeps the violation total") {
  auto b = bounds(3, 6);
  b.max_counterexamples = 3;
  const auto r = run_claim("L2-degree-sum", b);
  CHECK(r.counterexamples.size() == 3);
  CHECK(r.violations > 3);
}

TEST_CASE("reports are deterministic and replayable") {
  for (const char* id : {"L8-concat-connected", "L2-degree-sum", "R2-first-last-letter",
                         "L1-nontrivial-components-ge2", "T3-characterization",
                         "P-comp-general"}) {
    CAPTURE(id);
    ClaimBounds b;
    b.max_length = 4;
    const auto a = run_claim(id, b);
    const auto again = run_claim(id, b);
    CHECK(a.to_json().dump() == again.to_json().dump());
    const auto outcomes = replay_reports(a.to_json());
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].replayed == a.counterexamples.size());
    CHECK(outcomes[0].ok());
  }

  auto b = bounds(2, 6);
  b.convention_k0 = true;
  const auto c1 = run_claim("C1-coin-identity", b);
  CHECK(replay_reports(nlohmann::json::array({c1.to_json()}))[0].ok());
}

TEST_CASE("replay notices instances that do not violate") {
  nlohmann::json fake{{"claim_id", "L7-lyndon-connected"},
                      {"counterexamples", {{{"instance", {{"word", "ab"}, {"n", 2}}},
                                            {"violation", "made up"}}}}};
  const auto outcomes = replay_reports(fake);
  CHECK_FALSE(outcomes[0].ok());
  CHECK(outcomes[0].failures.size() == 1);
  CHECK_THROWS_AS(replay_reports(nlohmann::json::object()), InvalidArgument);
}

TEST_CASE("every component is the Lyndon graph of its subword") {
  for (int n : {2, 3}) {
    for (std::size_t len = 1; len <= (n == 3 ? 8u : 10u); ++len) {
      for (const auto& w : oracle::all_words(n, len)) {
        const auto g = build_lyndon_graph(w).graph;
        for (const auto& c : components(g)) {
          REQUIRE(build_lyndon_graph(subword_at(w, c)).graph == induced_subgraph(g, c));
        }
      }
    }
  }
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(run_claim("T1-cfl-unique", bounds(2, 15)), BoundExceeded);
  CHECK_THROWS_AS(run_claim("T3-characterization", bounds(3, 7)), BoundExceeded);
  CHECK_THROWS_AS(run_claim("R1-binary-parikh", bounds(3, 4)), InvalidArgument);
}

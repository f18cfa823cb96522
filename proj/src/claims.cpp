#include "lyn/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lyn/error.hpp"
#include "lyn/kernels.hpp"
#include "lyn/lyndon.hpp"
#include "lyn/lyngraph.hpp"
#include "lyn/represent.hpp"

namespace lyn {

using nlohmann::json;

std::string to_string(ClaimStatus status) {
  return status == ClaimStatus::kNoCounterexample ? "no-counterexample"
                                                  : "counterexamples-found";
}

json ClaimReport::to_json() const {
  json ces = json::array();
  for (const auto& c : counterexamples) {
    ces.push_back({{"instance", c.instance}, {"violation", c.violation}});
  }
  return json{{"claim_id", claim_id},
              {"anchor", anchor},
              {"statement", statement},
              {"instance_space", instance_space},
              {"bounds", bounds},
              {"instances_checked", instances_checked},
              {"status", to_string(status())},
              {"violations", violations},
              {"counterexamples", std::move(ces)},
              {"note", note},
              {"data", data.is_null() ? json::object() : data}};
}

std::string ClaimReport::to_text() const {
  std::ostringstream out;
  out << claim_id << " [" << anchor << "]: " << to_string(status()) << "\n"
      << "  checks: " << statement << "\n"
      << "  space: " << instance_space << " (" << instances_checked
      << " instances, " << violations << " violations)\n";
  if (!note.empty()) out << "  note: " << note << "\n";
  for (const auto& c : counterexamples) {
    out << "  counterexample " << c.instance.dump() << ": " << c.violation << "\n";
  }
  if (violations > counterexamples.size()) {
    out << "  (" << violations - counterexamples.size()
        << " further violations not listed)\n";
  }
  if (!data.is_null() && !data.empty()) out << "  data: " << data.dump() << "\n";
  out << "  runtime: " << runtime_seconds << " s\n";
  return out.str();
}

namespace {

constexpr const char* kLiteral =
    "checked on the literal reading; hand-derived counterexamples are expected";

const std::vector<ClaimDescriptor>& registry() {
  static const std::vector<ClaimDescriptor> claims{
      {"T1-cfl-unique", "Theorem 1",
       "every word has exactly one non-increasing factorization into Lyndon "
       "words, and the linear-time factorization returns it",
       3, 1, 8, ""},
      {"P1-standard-factorization", "Proposition 1",
       "for a Lyndon word l of length >= 2 with longest proper Lyndon suffix s "
       "and l = rs, r is Lyndon and r < rs < s",
       3, 2, 10, ""},
      {"R1-binary-parikh", "Remark 1",
       "over two letters the Lyndon graph equals the Parikh graph (edge i<j "
       "iff w_i = a and w_j = b)",
       2, 1, 10, ""},
      {"R2-first-last-letter", "Remark 2",
       "a word with connected Lyndon graph starts with a or b, ends with c, "
       "has |w|_b > 1 when it starts with b, and when it starts with a and "
       "ends with c vertices 1 and N are adjacent with degree sum N",
       3, 1, 6, kLiteral},
      {"L1-nontrivial-components", "Lemma 1",
       "no Lyndon graph over three letters has more than two non-trivial "
       "components",
       3, 1, 8, "threshold read literally as >= 3 non-trivial components"},
      {"L1-nontrivial-components-ge2", "Lemma 1",
       "no Lyndon graph over three letters has two or more non-trivial "
       "components",
       3, 1, 8, "alternative threshold (>= 2), following the binary precedent"},
      {"L2-degree-sum", "Lemma 2",
       "a connected Lyndon graph on N vertices has an edge whose endpoint "
       "degrees sum to N",
       3, 1, 6, kLiteral},
      {"P-tri-partition", "Proposition (tripartition)",
       "the positions of each letter form an independent set and the letter "
       "classes partition the vertices",
       3, 1, 8, ""},
      {"COR-induced-hereditary", "Corollary",
       "every induced subgraph of G(w) is the Lyndon graph of the matching "
       "scattered subword, so representability is hereditary",
       3, 1, 6, ""},
      {"T3-characterization", "Theorem 3",
       "a connected tripartite graph is ternary representable iff it is "
       "(6,3)-chordal with an edge whose endpoint degrees sum to |V|",
       3, 2, 6, kLiteral},
      {"L7-lyndon-connected", "Lemma 7",
       "the Lyndon graph of a Lyndon word is connected", 2, 1, 12, ""},
      {"L8-concat-connected", "Lemma 8",
       "for Lyndon words l_r <= l_s the Lyndon graph of l_s l_r is connected",
       2, 2, 8, kLiteral},
      {"P-comp-components", "Proposition (component count)",
       "if the factorization of w has h pairwise distinct factors then "
       "h >= number of components of G(w)",
       3, 1, 8, ""},
      {"P-comp-general", "Proposition (component count), general words",
       "for any word, the number of distinct factors is >= the number of "
       "components of G(w)",
       3, 1, 8, "hypothesis dropped; reported separately from P-comp-components"},
      {"C1-coin-identity", "Conjecture 1",
       "the alternating sum of S(N; n, k) over k is zero", 2, 2, 10, ""},
      {"C2-real-roots", "Conjecture 2",
       "the Stirling cycle polynomial has only real roots and -1 is a root",
       2, 2, 10, ""},
      {"Q1-component-subword", "Question 1",
       "each component of G(w) is the Lyndon graph of its scattered subword; "
       "whether that subword is a product of factors of w is recorded as data",
       3, 1, 7,
       "subset (strictly increasing factor indices) and sub-multiset "
       "(non-decreasing indices) matches are both reported"},
      {"Q2-uniform-tables", "Question 2",
       "S(N; n, k) restricted to l-uniform words, emitted as data for l = "
       "1..max_length",
       3, 1, 3, "data only; no claim is asserted"},
      {"Q4-comp-equality", "Question 4",
       "graph classes where h = number of components holds, emitted as data",
       3, 1, 6, "data only; no characterization is claimed"},
  };
  return claims;
}

const ClaimDescriptor& find_claim(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw InvalidArgument("unknown claim id \"" + std::string(id) + "\"");
}

struct Resolved {
  int n = 3;
  std::size_t min_length = 1;
  std::size_t max_length = 6;
  Interpretation interpretation = Interpretation::kStrictDecreasing;
  bool convention_k0 = false;
  std::size_t max_counterexamples = 100;
  std::uint64_t max_words = 0;
};

Resolved resolve(const ClaimDescriptor& c, const ClaimBounds& b) {
  Resolved r;
  r.n = b.alphabet_size.value_or(c.default_alphabet_size);
  r.min_length = b.min_length.value_or(c.default_min_length);
  r.max_length = b.max_length.value_or(c.default_max_length);
  r.interpretation = b.interpretation.value_or(Interpretation::kStrictDecreasing);
  r.convention_k0 = b.convention_k0.value_or(false);
  r.max_counterexamples = b.max_counterexamples;
  r.max_words = b.max_words;
  (void)Alphabet(r.n);
  if (r.min_length > r.max_length) {
    throw InvalidArgument("min length exceeds max length");
  }
  return r;
}

json bounds_json(const std::string& id, const Resolved& r) {
  json b{{"n", r.n}, {"min_length", r.min_length}, {"max_length", r.max_length}};
  if (id == "C1-coin-identity" || id == "C2-real-roots" || id == "Q2-uniform-tables") {
    b["interpretation"] = to_string(r.interpretation);
  }
  if (id == "C1-coin-identity") b["convention"] = r.convention_k0 ? "k0-is-1" : "raw";
  return b;
}

struct Outcome {
  bool applies = false;
  std::uint64_t instances = 0;  // overrides applies when non-zero
  std::optional<std::string> violation;
  std::optional<json> instance;  // overrides the default word instance
};

json word_instance(const Word& w) {
  return json{{"word", w.str()}, {"n", w.alphabet().size()}};
}

std::string edge_list(const Graph& g) {
  std::string out = "{";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(u) + std::to_string(v);
  }
  return out + "}";
}

std::string degree_sum_text(const Graph& g) {
  const auto deg = g.degrees();
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ", ";
    out += std::to_string(u) + "-" + std::to_string(v) + ":" +
           std::to_string(deg[static_cast<std::size_t>(u - 1)] +
                          deg[static_cast<std::size_t>(v - 1)]);
  }
  return out.empty() ? "no edges" : out;
}

// ---- word checkers --------------------------------------------------------

Outcome check_t1(const Word& w) {
  Outcome o;
  o.applies = true;
  const auto fast = cfl_factorize(w);
  const auto oracle = cfl_oracle(w, std::max(w.size(), kDefaultOracleBound));
  Word joined(w.alphabet());
  for (std::size_t i = 0; i < fast.factors.size(); ++i) {
    const auto& f = fast.factors[i];
    joined = joined.concat(f);
    if (!is_lyndon(f)) o.violation = "factor " + f.str() + " is not Lyndon";
    if (i > 0 && lex_compare(fast.factors[i - 1], f) < 0) {
      o.violation = "factors increase at " + f.str();
    }
  }
  if (!o.violation && joined != w) o.violation = "factors do not concatenate to w";
  if (!o.violation && fast != oracle) {
    o.violation = "fast " + fast.str() + " differs from oracle " + oracle.str();
  }
  return o;
}

Outcome check_p1(const Word& w) {
  Outcome o;
  if (w.size() < 2 || !is_lyndon(w)) return o;
  o.applies = true;
  auto [r, s] = standard_factorization(w);
  const Word rs = r.concat(s);
  if (rs != w) {
    o.violation = "r·s = " + rs.str() + " differs from l";
  } else if (!is_lyndon(r) || !is_lyndon(s)) {
    o.violation = "(" + r.str() + ", " + s.str() + ") not both Lyndon";
  } else if (!(lex_compare(r, rs) < 0 && lex_compare(rs, s) < 0)) {
    o.violation = "order r < rs < s fails for (" + r.str() + ", " + s.str() + ")";
  }
  return o;
}

Outcome check_r1(const Word& w) {
  Outcome o;
  o.applies = true;
  if (w.alphabet().size() != 2) {
    throw InvalidArgument("R1-binary-parikh needs a binary alphabet");
  }
  std::vector<Edge> parikh;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == 0 && w[j] == 1) {
        parikh.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
      }
  const Graph expected(static_cast<int>(w.size()), std::move(parikh));
  const Graph got = build_lyndon_graph(w).graph;
  if (got != expected) {
    o.violation = "Lyndon graph " + edge_list(got) + " vs Parikh graph " +
                  edge_list(expected);
  }
  return o;
}

Outcome check_r2(const Word& w) {
  Outcome o;
  const Graph g = build_lyndon_graph(w).graph;
  if (w.empty() || !is_connected(g)) return o;
  o.applies = true;
  std::vector<std::string> failed;
  const Letter first = w[0];
  const Letter last = w[w.size() - 1];
  if (first > 1) failed.push_back("starts with neither a nor b");
  if (last != 2) failed.push_back("does not end with c");
  if (first == 1 && letter_count(w, 1) <= 1) failed.push_back("starts with b but |w|_b <= 1");
  if (first == 0 && last == 2) {
    const int n = g.order();
    const auto deg = g.degrees();
    if (!g.has_edge(1, n)) {
      failed.push_back("vertices 1 and N not adjacent");
    } else if (deg.front() + deg.back() != n) {
      failed.push_back("deg(1) + deg(N) = " + std::to_string(deg.front() + deg.back()) +
                       " != N = " + std::to_string(n));
    }
  }
  if (!failed.empty()) {
    std::string text;
    for (const auto& f : failed) text += (text.empty() ? "" : "; ") + f;
    o.violation = text;
  }
  return o;
}

Outcome check_l1(const Word& w, std::size_t threshold) {
  Outcome o;
  o.applies = true;
  const Graph g = build_lyndon_graph(w).graph;
  const std::size_t count = nontrivial_component_count(g);
  if (count >= threshold) {
    o.violation = std::to_string(count) + " non-trivial components";
  }
  return o;
}

Outcome check_l2(const Word& w) {
  Outcome o;
  const Graph g = build_lyndon_graph(w).graph;
  if (w.empty() || !is_connected(g)) return o;
  o.applies = true;
  if (!degree_sum_pair(g)) {
    o.violation = "G" + edge_list(g) + ": no adjacent pair sums to N = " +
                  std::to_string(g.order()) + " (" + degree_sum_text(g) + ")";
  }
  return o;
}

Outcome check_ptri(const Word& w) {
  Outcome o;
  o.applies = true;
  const Graph g = build_lyndon_graph(w).graph;
  const auto parts = letter_partition(w);
  std::size_t covered = 0;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    covered += parts[t].size();
    if (!is_independent_set(g, parts[t])) {
      o.violation = std::string("letter class ") + Alphabet::render(static_cast<Letter>(t)) +
                    " is not independent";
    }
  }
  if (covered != w.size()) o.violation = "letter classes do not cover the vertices";
  return o;
}

std::optional<std::string> hereditary_violation(const Word& w,
                                                std::span<const Vertex> subset) {
  const Graph g = build_lyndon_graph(w).graph;
  const Graph induced = induced_subgraph(g, subset);
  const Graph built = build_lyndon_graph(subword_at(w, subset)).graph;
  if (induced != built) {
    return "induced " + edge_list(induced) + " != G(subword) " + edge_list(built);
  }
  return std::nullopt;
}

std::vector<Vertex> subset_from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<Vertex> s;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1U) s.push_back(static_cast<Vertex>(i + 1));
  return s;
}

Outcome check_cor(const Word& w) {
  Outcome o;
  o.applies = true;
  const std::uint64_t subsets = std::uint64_t{1} << w.size();
  o.instances = subsets;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto s = subset_from_mask(mask, w.size());
    if (auto v = hereditary_violation(w, s)) {
      o.violation = *v;
      json inst = word_instance(w);
      inst["subset"] = s;
      o.instance = inst;
      break;
    }
  }
  return o;
}

Outcome check_l7(const Word& w) {
  Outcome o;
  if (w.empty() || !is_lyndon(w)) return o;
  o.applies = true;
  const Graph g = build_lyndon_graph(w).graph;
  if (!is_connected(g)) {
    o.violation = "G" + edge_list(g) + " has " + std::to_string(components(g).size()) +
                  " components";
  }
  return o;
}

Outcome check_pcomp(const Word& w, bool general) {
  Outcome o;
  if (w.empty()) return o;
  const auto f = cfl_factorize(w);
  if (!general && !f.strictly_decreasing()) return o;
  o.applies = true;
  const std::size_t h = general ? f.distinct_factor_count() : f.factors.size();
  const std::size_t comp = components(build_lyndon_graph(w).graph).size();
  if (h < comp) {
    o.violation = "h = " + std::to_string(h) + " (" + f.str() + ") < " +
                  std::to_string(comp) + " components";
  }
  return o;
}

// Whether `target` is a product of `factors` taken at strictly increasing
// (or, with repeats, non-decreasing) indices.
bool product_of_factors(const Word& target, const std::vector<Word>& factors,
                        bool allow_repeat) {
  std::set<std::pair<std::size_t, std::size_t>> dead;
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t pos,
                                                          std::size_t next) {
    if (pos == target.size()) return true;
    if (dead.contains({pos, next})) return false;
    for (std::size_t j = next; j < factors.size(); ++j) {
      const auto& f = factors[j];
      if (pos + f.size() > target.size()) continue;
      if (target.substr(pos, f.size()) != f) continue;
      if (go(pos + f.size(), allow_repeat ? j : j + 1)) return true;
    }
    dead.insert({pos, next});
    return false;
  };
  return go(0, 0);
}

std::optional<std::string> q1_violation(const Word& w) {
  const Graph g = build_lyndon_graph(w).graph;
  for (const auto& c : components(g)) {
    const Graph induced = induced_subgraph(g, c);
    const Graph built = build_lyndon_graph(subword_at(w, c)).graph;
    if (induced != built) {
      return "component " + edge_list(induced) + " differs from G(" +
             subword_at(w, c).str() + ")";
    }
  }
  return std::nullopt;
}

Outcome check_q1(const Word& w) {
  Outcome o;
  o.applies = true;
  o.violation = q1_violation(w);
  return o;
}

using WordCheck = std::function<Outcome(const Word&)>;

WordCheck word_checker(std::string_view id) {
  if (id == "T1-cfl-unique") return check_t1;
  if (id == "P1-standard-factorization") return check_p1;
  if (id == "R1-binary-parikh") return check_r1;
  if (id == "R2-first-last-letter") return check_r2;
  if (id == "L1-nontrivial-components") return [](const Word& w) { return check_l1(w, 3); };
  if (id == "L1-nontrivial-components-ge2") return [](const Word& w) { return check_l1(w, 2); };
  if (id == "L2-degree-sum") return check_l2;
  if (id == "P-tri-partition") return check_ptri;
  if (id == "COR-induced-hereditary") return check_cor;
  if (id == "L7-lyndon-connected") return check_l7;
  if (id == "P-comp-components") return [](const Word& w) { return check_pcomp(w, false); };
  if (id == "P-comp-general") return [](const Word& w) { return check_pcomp(w, true); };
  if (id == "Q1-component-subword") return check_q1;
  return nullptr;
}

void record(ClaimReport& report, const Resolved& r, json instance, std::string violation) {
  ++report.violations;
  if (report.counterexamples.size() < r.max_counterexamples) {
    report.counterexamples.push_back({std::move(instance), std::move(violation)});
  }
}

void scan_words(ClaimReport& report, const Resolved& r, const WordCheck& check,
                std::size_t length_cap) {
  if (r.max_length > length_cap) {
    throw BoundExceeded(report.claim_id + " supports length <= " +
                        std::to_string(length_cap));
  }
  const Alphabet alphabet(r.n);
  for (std::size_t length = r.min_length; length <= r.max_length; ++length) {
    const std::uint64_t total = word_space_size(r.n, length, r.max_words);
    auto outcomes = kernels::map_indices<Outcome>(total, true, [&](std::uint64_t i) {
      return check(word_at_index(alphabet, length, i));
    });
    for (std::uint64_t i = 0; i < total; ++i) {
      auto& o = outcomes[i];
      report.instances_checked += o.instances ? o.instances : (o.applies ? 1 : 0);
      if (o.violation) {
        json inst = o.instance ? *o.instance : word_instance(word_at_index(alphabet, length, i));
        record(report, r, std::move(inst), *o.violation);
      }
    }
  }
}

std::string words_space(const Resolved& r, const std::string& filter) {
  return "words over " + std::to_string(r.n) + " letters of length " +
         std::to_string(r.min_length) + ".." + std::to_string(r.max_length) +
         (filter.empty() ? "" : ", " + filter);
}

// ---- non-word checkers -----------------------------------------------------

std::optional<std::string> l8_violation(const Word& ls, const Word& lr) {
  const Word l = ls.concat(lr);
  const Graph g = build_lyndon_graph(l).graph;
  if (is_connected(g)) return std::nullopt;
  return "G(" + l.str() + ") = " + edge_list(g) + " on " + std::to_string(g.order()) +
         " vertices has " + std::to_string(components(g).size()) + " components";
}

void run_l8(ClaimReport& report, const Resolved& r) {
  if (r.max_length > 16) throw BoundExceeded("L8-concat-connected supports length <= 16");
  const auto lyndon = generate_lyndon(r.n, r.max_length > 0 ? r.max_length - 1 : 0);
  // Pairs with l_r strictly below l_s first, then equal pairs (squares).
  for (int phase = 0; phase < 2; ++phase) {
    for (std::size_t total = std::max<std::size_t>(r.min_length, 2); total <= r.max_length;
         ++total) {
      for (const auto& ls : lyndon) {
        for (const auto& lr : lyndon) {
          if (ls.size() + lr.size() != total) continue;
          const auto order = lex_compare(lr, ls);
          if (phase == 0 ? !(order < 0) : order != 0) continue;
          ++report.instances_checked;
          if (auto v = l8_violation(ls, lr)) {
            record(report, r,
                   json{{"l_s", ls.str()}, {"l_r", lr.str()},
                        {"word", ls.concat(lr).str()}, {"n", r.n}},
                   *v);
          }
        }
      }
    }
  }
}

std::string t3_text(const Theorem3Flags& f, Verdict verdict,
                    const std::optional<Word>& witness) {
  std::string s = std::string("predicate ") + (f.all ? "true" : "false") +
                  " (connected=" + (f.connected ? "1" : "0") +
                  " tripartite=" + (f.tripartite ? "1" : "0") +
                  " chordal63=" + (f.chordal63 ? "1" : "0") +
                  " degree_sum_pair=" + (f.degree_sum_pair ? "1" : "0") + ") but " +
                  to_string(verdict);
  if (witness) s += " via " + witness->str();
  return s;
}

std::optional<std::string> t3_violation(const Graph& g, int n) {
  const auto flags = theorem3_predicate(g);
  const auto search = find_representing_word(g, n);
  if (search.verdict == Verdict::kBoundExceeded) {
    throw BoundExceeded("representability search budget exceeded");
  }
  if (flags.all == (search.verdict == Verdict::kRepresentable)) return std::nullopt;
  return t3_text(flags, search.verdict, search.witness);
}

void run_t3(ClaimReport& report, const Resolved& r) {
  AuditOptions options;
  options.min_order = static_cast<int>(r.min_length);
  options.search.max_words = r.max_words;
  const auto audit = audit_theorem3(static_cast<int>(r.max_length), r.n, options);
  report.instances_checked = audit.rows.size();
  for (const auto* row : audit.mismatches()) {
    record(report, r,
           json{{"graph", json::parse(graph_to_json(row->graph))},
                {"certificate", row->form.hex()},
                {"n", r.n}},
           t3_text(row->flags, row->verdict, row->witness));
  }
  json agreeing = json::array();
  for (const auto& row : audit.rows) {
    if (!row.agrees()) continue;
    agreeing.push_back({{"certificate", row.form.hex()},
                        {"edges", json::parse(graph_to_json(row.graph))["edges"]},
                        {"representable", row.verdict == Verdict::kRepresentable},
                        {"witness", row.witness ? json(row.witness->str()) : json()}});
  }
  report.data = {{"classes", audit.rows.size()},
                 {"agreements", audit.agreements()},
                 {"agreeing_classes", std::move(agreeing)}};
}

std::optional<std::string> c1_violation(std::size_t length, int n,
                                        Interpretation interpretation,
                                        bool convention_k0, std::uint64_t max_words) {
  const BigInt sum = coin_identity_audit(length, n, interpretation, convention_k0,
                                         StirlingOptions{max_words, true});
  if (sum == 0) return std::nullopt;
  return "alternating sum = " + sum.get_str();
}

void run_c1(ClaimReport& report, const Resolved& r) {
  json sums = json::object();
  for (std::size_t length = r.min_length; length <= r.max_length; ++length) {
    ++report.instances_checked;
    const BigInt sum = coin_identity_audit(length, r.n, r.interpretation,
                                           r.convention_k0,
                                           StirlingOptions{r.max_words, true});
    sums[std::to_string(length)] = sum.get_str();
    if (sum != 0) {
      record(report, r,
             json{{"N", length}, {"n", r.n},
                  {"interpretation", to_string(r.interpretation)},
                  {"convention", r.convention_k0 ? "k0-is-1" : "raw"}},
             "alternating sum = " + sum.get_str());
    }
  }
  report.data = {{"alternating_sums", std::move(sums)}};
}

std::optional<std::string> c2_violation(const RealRootReport& rr) {
  std::vector<std::string> failed;
  if (!rr.all_roots_real) {
    failed.push_back(std::to_string(rr.distinct_real_roots) + " distinct real roots, " +
                     "square-free degree " + std::to_string(rr.squarefree_degree));
  }
  if (!rr.minus_one_is_root) failed.push_back("x = -1 is not a root");
  if (failed.empty()) return std::nullopt;
  std::string s;
  for (const auto& f : failed) s += (s.empty() ? "" : "; ") + f;
  return s;
}

json coefficients_json(const std::vector<BigInt>& c) {
  json out = json::array();
  for (const auto& v : c) out.push_back(v.get_str());
  return out;
}

void run_c2(ClaimReport& report, const Resolved& r) {
  json polys = json::object();
  for (std::size_t length = r.min_length; length <= r.max_length; ++length) {
    ++report.instances_checked;
    const auto rr = real_roots_audit(length, r.n, r.interpretation,
                                     StirlingOptions{r.max_words, true});
    polys[std::to_string(length)] = {{"coefficients", coefficients_json(rr.coefficients)},
                                     {"all_roots_real", rr.all_roots_real},
                                     {"minus_one_is_root", rr.minus_one_is_root}};
    if (auto v = c2_violation(rr)) {
      record(report, r,
             json{{"N", length}, {"n", r.n},
                  {"interpretation", to_string(r.interpretation)}},
             *v);
    }
  }
  report.data = {{"polynomials", std::move(polys)}};
}

void run_q1(ClaimReport& report, const Resolved& r) {
  scan_words(report, r, check_q1, 12);
  std::uint64_t comps = 0;
  std::uint64_t subset = 0;
  std::uint64_t multiset = 0;
  json unmatched = json::array();
  const Alphabet alphabet(r.n);
  for (std::size_t length = std::max<std::size_t>(r.min_length, 1);
       length <= r.max_length; ++length) {
    const std::uint64_t total = word_space_size(r.n, length, r.max_words);
    for (std::uint64_t i = 0; i < total; ++i) {
      const Word w = word_at_index(alphabet, length, i);
      const auto factors = cfl_factorize(w).factors;
      for (const auto& c : components(build_lyndon_graph(w).graph)) {
        ++comps;
        const Word sub = subword_at(w, c);
        const bool as_subset = product_of_factors(sub, factors, false);
        const bool as_multiset = as_subset || product_of_factors(sub, factors, true);
        subset += as_subset ? 1 : 0;
        multiset += as_multiset ? 1 : 0;
        if (!as_multiset && unmatched.size() < 20) {
          unmatched.push_back({{"word", w.str()}, {"component", c}, {"subword", sub.str()}});
        }
      }
    }
  }
  report.data = {{"components", comps},
                 {"subset_products", subset},
                 {"multiset_products", multiset},
                 {"unmatched_examples", std::move(unmatched)}};
}

void run_q2(ClaimReport& report, const Resolved& r) {
  json tables = json::array();
  for (std::size_t l = std::max<std::size_t>(r.min_length, 1); l <= r.max_length; ++l) {
    const auto t = uniform_table(l, r.n, r.interpretation,
                                 StirlingOptions{r.max_words, true});
    ++report.instances_checked;
    tables.push_back({{"l", l},
                      {"N", t.length},
                      {"counts", coefficients_json(t.counts)},
                      {"alternating_sum", alternating_sum(t).get_str()}});
  }
  report.data = {{"tables", std::move(tables)}};
}

void run_q4(ClaimReport& report, const Resolved& r) {
  if (r.max_length > static_cast<std::size_t>(kDefaultIsoOrderBound)) {
    throw BoundExceeded("Q4-comp-equality supports length <= 10");
  }
  const Alphabet alphabet(r.n);
  json per_length = json::array();
  std::map<CanonicalForm, std::pair<std::string, Graph>> equal_classes;
  std::set<CanonicalForm> strict_classes;
  for (std::size_t length = r.min_length; length <= r.max_length; ++length) {
    const std::uint64_t total = word_space_size(r.n, length, r.max_words);
    std::uint64_t eligible = 0;
    std::uint64_t equal = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
      const Word w = word_at_index(alphabet, length, i);
      const auto f = cfl_factorize(w);
      if (!f.strictly_decreasing()) continue;
      ++eligible;
      const Graph g = build_lyndon_graph(w).graph;
      const auto form = canonical_form(g);
      if (f.factors.size() == components(g).size()) {
        ++equal;
        equal_classes.try_emplace(form, w.str(), canonical_graph(g));
      } else {
        strict_classes.insert(form);
      }
    }
    report.instances_checked += eligible;
    per_length.push_back({{"N", length}, {"words", eligible}, {"equality", equal}});
  }
  json classes = json::array();
  for (const auto& [form, entry] : equal_classes) {
    classes.push_back({{"certificate", form.hex()},
                       {"first_word", entry.first},
                       {"edges", json::parse(graph_to_json(entry.second))["edges"]},
                       {"also_strict", strict_classes.contains(form)}});
  }
  report.data = {{"per_length", std::move(per_length)},
                 {"equality_classes", std::move(classes)}};
}

}  // namespace

std::vector<ClaimDescriptor> list_claims() { return registry(); }

ClaimReport run_claim(std::string_view id, const ClaimBounds& bounds) {
  const auto& desc = find_claim(id);
  const Resolved r = resolve(desc, bounds);
  const auto start = std::chrono::steady_clock::now();

  ClaimReport report;
  report.claim_id = desc.id;
  report.anchor = desc.anchor;
  report.statement = desc.statement;
  report.note = desc.literal_note;
  report.bounds = bounds_json(desc.id, r);

  if (id == "T3-characterization") {
    report.instance_space = "connected graph classes on " + std::to_string(r.min_length) +
                            ".." + std::to_string(r.max_length) + " vertices, search over " +
                            std::to_string(r.n) + " letters";
    run_t3(report, r);
  } else if (id == "L8-concat-connected") {
    report.instance_space = "pairs of Lyndon words over " + std::to_string(r.n) +
                            " letters with l_r <= l_s and |l_s l_r| <= " +
                            std::to_string(r.max_length) +
                            "; strict pairs first, then l_r = l_s";
    run_l8(report, r);
  } else if (id == "C1-coin-identity" || id == "C2-real-roots") {
    report.instance_space = "N = " + std::to_string(r.min_length) + ".." +
                            std::to_string(r.max_length) + ", n = " + std::to_string(r.n) +
                            ", " + to_string(r.interpretation);
    if (id == "C1-coin-identity") {
      report.instance_space += r.convention_k0 ? ", S(N,n,0) = 1" : ", raw S(N,n,0) = 0";
      run_c1(report, r);
    } else {
      run_c2(report, r);
    }
  } else if (id == "Q1-component-subword") {
    report.instance_space = words_space(r, "every component");
    run_q1(report, r);
  } else if (id == "Q2-uniform-tables") {
    report.instance_space = "l-uniform words over " + std::to_string(r.n) + " letters, l = " +
                            std::to_string(r.min_length) + ".." +
                            std::to_string(r.max_length);
    run_q2(report, r);
  } else if (id == "Q4-comp-equality") {
    report.instance_space = words_space(r, "strictly decreasing factorization");
    run_q4(report, r);
  } else {
    std::string filter;
    std::size_t cap = 14;
    if (id == "P1-standard-factorization" || id == "L7-lyndon-connected") filter = "Lyndon words";
    if (id == "R2-first-last-letter" || id == "L2-degree-sum") filter = "connected G(w)";
    if (id == "P-comp-components") filter = "strictly decreasing factorization";
    if (id == "COR-induced-hereditary") {
      filter = "every vertex subset";
      cap = 10;
    }
    if (id == "T1-cfl-unique") cap = kDefaultOracleBound;
    if (id == "R1-binary-parikh" && r.n != 2) {
      throw InvalidArgument("R1-binary-parikh is defined for n = 2 only");
    }
    report.instance_space = words_space(r, filter);
    scan_words(report, r, word_checker(id), cap);
  }

  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<std::string> replay_counterexample(std::string_view id,
                                                 const json& instance) {
  const auto& desc = find_claim(id);
  try {
    if (desc.id == "T3-characterization") {
      return t3_violation(graph_from_json(instance.at("graph").dump()),
                          instance.at("n").get<int>());
    }
    if (desc.id == "L8-concat-connected") {
      const int n = instance.at("n").get<int>();
      const Word ls = Word::parse(instance.at("l_s").get<std::string>(), n);
      const Word lr = Word::parse(instance.at("l_r").get<std::string>(), n);
      if (!is_lyndon(ls) || !is_lyndon(lr) || lex_compare(lr, ls) > 0) {
        return std::nullopt;  // outside the hypothesis
      }
      return l8_violation(ls, lr);
    }
    if (desc.id == "C1-coin-identity") {
      return c1_violation(instance.at("N").get<std::size_t>(), instance.at("n").get<int>(),
                          parse_interpretation(instance.at("interpretation").get<std::string>()),
                          instance.at("convention").get<std::string>() == "k0-is-1",
                          kDefaultStirlingBudget);
    }
    if (desc.id == "C2-real-roots") {
      return c2_violation(real_roots_audit(
          instance.at("N").get<std::size_t>(), instance.at("n").get<int>(),
          parse_interpretation(instance.at("interpretation").get<std::string>())));
    }
    const Word w = Word::parse(instance.at("word").get<std::string>(),
                               instance.at("n").get<int>());
    if (desc.id == "COR-induced-hereditary") {
      const auto subset = instance.at("subset").get<std::vector<Vertex>>();
      return hereditary_violation(w, subset);
    }
    if (auto check = word_checker(desc.id)) {
      Outcome o = check(w);
      return o.applies || o.instances ? o.violation : std::nullopt;
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed counterexample: ") + e.what());
  }
  return std::nullopt;
}

std::vector<ReplayOutcome> replay_reports(const json& reports) {
  std::vector<ReplayOutcome> out;
  auto replay_one = [&](const json& report) {
    if (!report.is_object() || !report.contains("claim_id") ||
        !report.contains("counterexamples")) {
      throw InvalidArgument("not a claim report: missing claim_id or counterexamples");
    }
    ReplayOutcome r;
    r.claim_id = report["claim_id"].get<std::string>();
    for (const auto& c : report["counterexamples"]) {
      ++r.replayed;
      if (replay_counterexample(r.claim_id, c.at("instance"))) {
        ++r.reproduced;
      } else {
        r.failures.push_back(c.at("instance").dump());
      }
    }
    out.push_back(std::move(r));
  };
  if (reports.is_array()) {
    for (const auto& report : reports) replay_one(report);
  } else {
    replay_one(reports);
  }
  return out;
}

}  // namespace lyn

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lyn/claims.hpp"
#include "lyn/error.hpp"
#include "lyn/lyndon.hpp"
#include "lyn/lyngraph.hpp"
#include "lyn/represent.hpp"
#include "lyn/stirling.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kCounterexamples = 1, kUsage = 2, kBudget = 3 };

struct Common {
  int n = 0;  // 0: infer from input / use command default
  std::string format = "text";
  std::string output;
  std::uint64_t max_words = 0;
  int max_order = lyn::kDefaultIsoOrderBound;
  std::size_t oracle_bound = lyn::kDefaultOracleBound;
  bool serial = false;
};

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
  cmd->add_option("--n", c.n, "alphabet size")->check(CLI::Range(1, 26));
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember(formats));
  cmd->add_option("-o,--output", c.output, "write to file instead of stdout");
  cmd->add_option("--max-words", c.max_words, "word budget");
  cmd->add_option("--max-order", c.max_order, "graph order bound");
  cmd->add_option("--oracle-bound", c.oracle_bound, "exhaustive oracle bound");
  cmd->add_flag("--serial", c.serial, "disable worker threads");
}

lyn::Word read_word(const std::string& text, int n) {
  return n > 0 ? lyn::Word::parse(text, n) : lyn::Word::parse(text);
}

std::string slurp(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw lyn::InvalidArgument("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string render_factorize(const Common& c, const std::string& text,
                             bool oracle) {
  auto w = read_word(text, c.n);
  auto f = oracle ? lyn::cfl_oracle(w, c.oracle_bound) : lyn::cfl_factorize(w);
  if (c.format == "json") {
    json out = json::array();
    for (const auto& u : f.factors) out.push_back(u.str());
    return out.dump() + "\n";
  }
  return f.str() + "\n";
}

std::string render_graph(const Common& c, const std::string& text) {
  auto w = read_word(text, c.n);
  auto lg = lyn::build_lyndon_graph(w);
  if (c.format == "json") return lyn::graph_to_json(lg.graph) + "\n";
  if (c.format == "dot") return lyn::graph_to_dot(lg.graph, &lg.word);
  std::ostringstream out;
  out << "G(" << w.str() << "): " << lg.graph.order() << " vertices, "
      << lg.graph.edges().size() << " edges\n";
  for (auto [u, v] : lg.graph.edges()) out << u << " " << v << "\n";
  return out.str();
}

lyn::SearchOptions search_opts(const Common& c) {
  lyn::SearchOptions s;
  if (c.max_words) s.max_words = c.max_words;
  s.parallel = !c.serial;
  return s;
}

std::string render_represent(const Common& c, const std::string& path,
                             int& code) {
  auto g = lyn::graph_from_json(slurp(path));
  if (g.order() > c.max_order)
    throw lyn::BoundExceeded("graph order " + std::to_string(g.order()) +
                             " exceeds --max-order");
  int n = c.n > 0 ? c.n : 3;
  auto r = lyn::find_representing_word(g, n, search_opts(c));
  if (r.verdict == lyn::Verdict::kBoundExceeded) code = kBudget;
  if (c.format == "json") {
    json out;
    out["alphabet_size"] = n;
    out["graph"] = json::parse(lyn::graph_to_json(g));
    out["verdict"] = lyn::to_string(r.verdict);
    out["witness"] = r.witness ? json(r.witness->str()) : json(nullptr);
    out["words_examined"] = r.words_examined;
    return out.dump() + "\n";
  }
  std::ostringstream out;
  out << lyn::to_string(r.verdict);
  if (r.witness) out << " " << r.witness->str();
  out << " (n=" << n << ", " << r.words_examined << " words examined)\n";
  return out.str();
}

std::string render_classify(const Common& c, std::size_t length,
                            bool list_words) {
  int n = c.n > 0 ? c.n : 3;
  auto classes = lyn::classify_words(length, n, search_opts(c));
  if (c.format == "json") {
    json out = json::array();
    for (const auto& [form, words] : classes) {
      json row;
      row["certificate"] = form.hex();
      row["count"] = words.size();
      row["graph"] = json::parse(
          lyn::graph_to_json(lyn::build_lyndon_graph(words.front()).graph));
      row["first"] = words.front().str();
      if (list_words) {
        row["words"] = json::array();
        for (const auto& w : words) row["words"].push_back(w.str());
      }
      out.push_back(row);
    }
    return out.dump() + "\n";
  }
  std::ostringstream out;
  out << classes.size() << " classes, length " << length << ", n=" << n
      << "\n";
  for (const auto& [form, words] : classes) {
    auto g = lyn::build_lyndon_graph(words.front()).graph;
    out << form.hex() << "  edges=" << g.edges().size()
        << "  words=" << words.size() << "  first=" << words.front().str();
    if (list_words)
      for (std::size_t i = 1; i < words.size(); ++i) out << " " << words[i].str();
    out << "\n";
  }
  return out.str();
}

struct StirlingArgs {
  std::size_t length = 0;
  std::size_t uniform = 0;
  std::string interpretation = "strict-decreasing";
  bool k0 = false;
  std::string method = "auto";
};

std::string render_stirling(const Common& c, const StirlingArgs& a,
                            bool have_length) {
  int n = c.n > 0 ? c.n : 3;
  auto interp = lyn::parse_interpretation(a.interpretation);
  lyn::StirlingOptions opts;
  if (c.max_words) opts.max_words = c.max_words;
  opts.parallel = !c.serial;

  lyn::StirlingTable t;
  if (a.uniform) {
    if (have_length && a.length != a.uniform * n)
      throw lyn::InvalidArgument("--N must equal l*n for uniform tables");
    t = lyn::uniform_table(a.uniform, n, interp, opts);
  } else {
    if (!have_length) throw lyn::InvalidArgument("stirling needs --N or --uniform");
    if (a.method == "gf") {
      if (interp != lyn::Interpretation::kStrictDecreasing)
        throw lyn::InvalidArgument("gf only covers strict-decreasing");
      t = lyn::stirling_gf(a.length, n);
    } else if (a.method == "brute") {
      t = lyn::stirling_bruteforce(a.length, n, interp, opts);
    } else {
      t = lyn::stirling_table(a.length, n, interp, opts);
    }
  }
  t = lyn::with_convention(std::move(t), a.k0);

  if (c.format == "json") return t.to_json() + "\n";
  if (c.format == "csv") return t.to_csv();
  std::ostringstream out;
  out << "S(N=" << t.length << "; n=" << t.alphabet_size << ", k)  "
      << lyn::to_string(t.interpretation)
      << (t.convention_k0 ? ", k0-is-1" : ", raw");
  if (t.uniform_multiplicity) out << ", " << t.uniform_multiplicity << "-uniform";
  out << "\n";
  for (std::size_t k = 0; k < t.counts.size(); ++k)
    out << "k=" << k << "  " << t.counts[k].get_str() << "\n";
  out << "total " << t.total().get_str() << "\n";
  out << "alternating sum " << lyn::alternating_sum(t).get_str() << "\n";
  return out.str();
}

struct AuditArgs {
  std::string id;
  int min_length = 0;
  int max_length = 0;
  std::string interpretation;
  bool k0 = false;
  std::size_t max_counterexamples = 100;
  std::string replay;
};

std::string render_claim_list() {
  std::ostringstream out;
  for (const auto& d : lyn::list_claims()) {
    out << d.id << "  [" << d.anchor << "]  n=" << d.default_alphabet_size
        << " N=" << d.default_min_length << ".." << d.default_max_length
        << "\n    " << d.statement << "\n";
  }
  return out.str();
}

std::string render_replay(const Common& c, const std::string& path, int& code) {
  json reports;
  try {
    reports = json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw lyn::InvalidArgument(std::string("malformed report JSON: ") + e.what());
  }
  auto outcomes = lyn::replay_reports(reports);
  json out = json::array();
  std::ostringstream text;
  for (const auto& o : outcomes) {
    if (!o.ok()) code = kCounterexamples;
    out.push_back({{"claim", o.claim_id},
                   {"replayed", o.replayed},
                   {"reproduced", o.reproduced},
                   {"failures", o.failures}});
    text << o.claim_id << ": " << o.reproduced << "/" << o.replayed
         << " counterexamples reproduced\n";
    for (const auto& f : o.failures) text << "  no longer violates: " << f << "\n";
  }
  return c.format == "json" ? out.dump(2) + "\n" : text.str();
}

std::string render_audit(const Common& c, const AuditArgs& a, CLI::App* cmd,
                         int& code) {
  if (!a.replay.empty()) return render_replay(c, a.replay, code);
  if (a.id.empty()) throw lyn::InvalidArgument("audit needs a claim id, 'all' or 'list'");
  if (a.id == "list") {
    if (c.format != "json") return render_claim_list();
    json out = json::array();
    for (const auto& d : lyn::list_claims())
      out.push_back({{"id", d.id},
                     {"anchor", d.anchor},
                     {"statement", d.statement},
                     {"n", d.default_alphabet_size},
                     {"min_N", d.default_min_length},
                     {"max_N", d.default_max_length}});
    return out.dump(2) + "\n";
  }

  lyn::ClaimBounds b;
  b.max_counterexamples = a.max_counterexamples;
  if (c.max_words) b.max_words = c.max_words;

  std::vector<lyn::ClaimReport> reports;
  if (a.id == "all") {
    for (const auto& d : lyn::list_claims()) reports.push_back(lyn::run_claim(d.id, b));
  } else {
    if (c.n > 0) b.alphabet_size = c.n;
    if (cmd->count("--min-N")) b.min_length = a.min_length;
    if (cmd->count("--max-N")) b.max_length = a.max_length;
    if (!a.interpretation.empty())
      b.interpretation = lyn::parse_interpretation(a.interpretation);
    if (cmd->count("--k0-convention")) b.convention_k0 = a.k0;
    reports.push_back(lyn::run_claim(a.id, b));
  }

  for (const auto& r : reports)
    if (r.status() == lyn::ClaimStatus::kCounterexamplesFound) code = kCounterexamples;

  if (c.format == "json") {
    if (reports.size() == 1 && a.id != "all") return reports[0].to_json().dump(2) + "\n";
    json out = json::array();
    for (const auto& r : reports) out.push_back(r.to_json());
    return out.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += "\n";
    out += reports[i].to_text();
  }
  return out;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw lyn::InvalidArgument("cannot write " + c.output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyndon words, Lyndon graphs and generalized Stirling numbers"};
  app.require_subcommand(1);

  Common common;

  std::string word;
  bool use_oracle = false;
  auto* factorize = app.add_subcommand("factorize", "CFL factorization of a word");
  factorize->add_option("word", word)->required();
  factorize->add_flag("--oracle", use_oracle, "use the exhaustive oracle");
  add_common(factorize, common, {"text", "json"});

  auto* graph = app.add_subcommand("graph", "Lyndon graph of a word");
  graph->add_option("word", word)->required();
  add_common(graph, common, {"text", "json", "dot"});

  std::string graph_file;
  auto* represent = app.add_subcommand("represent", "search for a representing word");
  represent->add_option("graph-file", graph_file, "edge-list JSON, or - for stdin")
      ->required();
  add_common(represent, common, {"text", "json"});

  std::size_t class_length = 0;
  bool list_words = false;
  auto* classify = app.add_subcommand("classify", "bucket words by graph class");
  classify->add_option("--length,--N", class_length)->required();
  classify->add_flag("--words", list_words, "list every word in each class");
  add_common(classify, common, {"text", "json"});

  StirlingArgs st;
  auto* stirling = app.add_subcommand("stirling", "generalized Stirling cycle numbers");
  stirling->add_option("--N", st.length, "word length");
  stirling->add_option("--uniform", st.uniform, "tally l-uniform words only");
  stirling->add_option("--interpretation", st.interpretation)
      ->check(CLI::IsMember({"strict-decreasing", "distinct-count", "strict", "distinct"}));
  stirling->add_flag("--k0-convention", st.k0, "set S(N;n,0) = 1");
  stirling->add_option("--method", st.method)->check(CLI::IsMember({"auto", "gf", "brute"}));
  add_common(stirling, common, {"text", "json", "csv"});

  AuditArgs au;
  auto* audit = app.add_subcommand("audit", "audit a claim over bounded instances");
  audit->add_option("claim", au.id, "claim id, 'all' or 'list'");
  audit->add_option("--min-N", au.min_length);
  audit->add_option("--max-N,--maxlen,--N-max", au.max_length);
  audit->add_option("--interpretation", au.interpretation)
      ->check(CLI::IsMember({"strict-decreasing", "distinct-count", "strict", "distinct"}));
  audit->add_flag("--k0-convention", au.k0);
  audit->add_option("--max-counterexamples", au.max_counterexamples);
  audit->add_option("--replay", au.replay, "re-verify counterexamples in a saved report");
  add_common(audit, common, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lyngraph: " << e.what() << "\n";
    return kUsage;
  }

  int code = kOk;
  try {
    std::string out;
    if (*factorize) out = render_factorize(common, word, use_oracle);
    else if (*graph) out = render_graph(common, word);
    else if (*represent) out = render_represent(common, graph_file, code);
    else if (*classify) out = render_classify(common, class_length, list_words);
    else if (*stirling) out = render_stirling(common, st, stirling->count("--N") > 0);
    else if (*audit) out = render_audit(common, au, audit, code);
    emit(common, out);
  } catch (const lyn::BoundExceeded& e) {
    std::cerr << "lyngraph: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const lyn::InvalidArgument& e) {
    std::cerr << "lyngraph: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "lyngraph: error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

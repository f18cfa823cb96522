#include "lyn/represent.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lyn/detail/small_graph.hpp"
#include "lyn/error.hpp"
#include "lyn/kernels.hpp"
#include "lyn/lyngraph.hpp"

namespace lyn {

namespace {

void check_order(const Graph& g, int max_order, const char* what) {
  if (g.order() > max_order) {
    throw BoundExceeded(std::string(what) + " supports order <= " +
                        std::to_string(max_order) + ", got " +
                        std::to_string(g.order()));
  }
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(order) + ":";
  for (auto b : certificate) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g, const Graph& h,
                                                  int max_order) {
  check_order(g, max_order, "isomorphism test");
  check_order(h, max_order, "isomorphism test");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  auto phi = detail::find_isomorphism(g.adjacency_masks(), h.adjacency_masks());
  if (!phi) return std::nullopt;
  std::vector<Vertex> out;
  out.reserve(phi->size());
  for (int image : *phi) out.push_back(image + 1);
  for (auto [u, v] : g.edges()) {
    if (!h.has_edge(out[static_cast<std::size_t>(u - 1)],
                    out[static_cast<std::size_t>(v - 1)])) {
      return std::nullopt;
    }
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g, int max_order) {
  check_order(g, max_order, "canonical form");
  return CanonicalForm{g.order(),
                       detail::canonical_labeling(g.adjacency_masks()).bits};
}

Graph canonical_graph(const Graph& g, int max_order) {
  check_order(g, max_order, "canonical form");
  const auto rows = g.adjacency_masks();
  const auto canon = detail::canonical_labeling(rows);
  std::vector<int> position(rows.size());
  for (std::size_t p = 0; p < canon.order.size(); ++p) {
    position[static_cast<std::size_t>(canon.order[p])] = static_cast<int>(p);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(position[static_cast<std::size_t>(u - 1)] + 1,
                       position[static_cast<std::size_t>(v - 1)] + 1);
  }
  return Graph(g.order(), std::move(edges));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kRepresentable:
      return "representable";
    case Verdict::kNotRepresentable:
      return "not-representable";
    case Verdict::kBoundExceeded:
      return "bound-exceeded";
  }
  return "unknown";
}

RepresentabilityResult find_representing_word(const Graph& g, int n,
                                              SearchOptions options) {
  const Alphabet alphabet(n);
  RepresentabilityResult result{g, n, Verdict::kNotRepresentable, std::nullopt, 0};
  std::uint64_t total = 0;
  try {
    total = word_space_size(n, static_cast<std::size_t>(g.order()),
                            options.max_words);
    if (g.order() > 32) throw BoundExceeded("graph order above 32");
  } catch (const BoundExceeded&) {
    result.verdict = Verdict::kBoundExceeded;
    return result;
  }
  const auto target = g.adjacency_masks();
  const auto index = options.parallel
                         ? kernels::first_witness_parallel(target, n, total)
                         : kernels::first_witness_serial(target, n, total);
  if (!index) {
    result.words_examined = total;
    return result;
  }
  Word witness = word_at_index(alphabet, static_cast<std::size_t>(g.order()), *index);
  if (!detail::find_isomorphism(build_lyndon_graph(witness).graph.adjacency_masks(),
                                target)) {
    throw InternalInconsistency("witness " + witness.str() +
                                " does not reproduce the target graph");
  }
  result.verdict = Verdict::kRepresentable;
  result.witness = std::move(witness);
  result.words_examined = *index + 1;
  return result;
}

std::map<CanonicalForm, std::vector<Word>> classify_words(std::size_t length,
                                                          int n,
                                                          SearchOptions options) {
  const Alphabet alphabet(n);
  if (length > static_cast<std::size_t>(kDefaultIsoOrderBound)) {
    throw BoundExceeded("classification supports length <= " +
                        std::to_string(kDefaultIsoOrderBound));
  }
  const std::uint64_t total = word_space_size(n, length, options.max_words);
  const auto certs = options.parallel
                         ? kernels::certificates_parallel(n, length, total)
                         : kernels::certificates_serial(n, length, total);
  std::map<CanonicalForm, std::vector<Word>> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    out[CanonicalForm{static_cast<int>(length), certs[i]}].push_back(
        word_at_index(alphabet, length, i));
  }
  return out;
}

bool is_tripartite(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  std::function<bool(int)> paint = [&](int v) {
    if (v == g.order()) return true;
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (Vertex u : adj[static_cast<std::size_t>(v)]) {
        if (color[static_cast<std::size_t>(u - 1)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (paint(v + 1)) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return paint(0);
}

Theorem3Flags theorem3_predicate(const Graph& g, int max_order) {
  check_order(g, max_order, "theorem-3 predicate");
  Theorem3Flags f;
  f.connected = is_connected(g);
  f.tripartite = is_tripartite(g);
  f.chordal63 = is_rs_chordal(g, 6, 3, std::max(max_order, kDefaultCycleOrderBound));
  f.degree_sum_pair = degree_sum_pair(g).has_value();
  f.all = f.connected && f.tripartite && f.chordal63 && f.degree_sum_pair;
  return f;
}

std::vector<Graph> connected_graph_classes(int order, int max_order) {
  if (order < 1) throw InvalidArgument("graph order must be positive");
  if (order > max_order) {
    throw BoundExceeded("graph-class enumeration supports order <= " +
                        std::to_string(max_order) + ", got " +
                        std::to_string(order));
  }
  std::vector<Edge> slots;
  for (int u = 1; u <= order; ++u)
    for (int v = u + 1; v <= order; ++v) slots.emplace_back(u, v);
  const std::uint64_t subsets = std::uint64_t{1} << slots.size();
  std::map<CanonicalForm, Graph> classes;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if ((mask >> b) & 1U) edges.push_back(slots[b]);
    }
    Graph g(order, std::move(edges));
    if (!is_connected(g)) continue;
    auto form = canonical_form(g, max_order);
    if (!classes.contains(form)) classes.emplace(form, canonical_graph(g, max_order));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back(std::move(g));
  return out;
}

std::size_t Theorem3Audit::agreements() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.agrees(); }));
}

std::vector<const Theorem3Row*> Theorem3Audit::mismatches() const {
  std::vector<const Theorem3Row*> out;
  for (const auto& r : rows)
    if (!r.agrees()) out.push_back(&r);
  return out;
}

namespace {

nlohmann::json row_json(const Theorem3Row& r) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : r.graph.edges()) edges.push_back({u, v});
  return nlohmann::json{
      {"certificate", r.form.hex()},
      {"graph", {{"order", r.graph.order()}, {"edges", edges}}},
      {"predicate",
       {{"connected", r.flags.connected},
        {"tripartite", r.flags.tripartite},
        {"chordal63", r.flags.chordal63},
        {"degree_sum_pair", r.flags.degree_sum_pair},
        {"all", r.flags.all}}},
      {"verdict", to_string(r.verdict)},
      {"witness", r.witness ? nlohmann::json(r.witness->str()) : nlohmann::json()}};
}

}  // namespace

std::string Theorem3Audit::to_json() const {
  nlohmann::json mism = nlohmann::json::array();
  for (const auto* r : mismatches()) mism.push_back(row_json(*r));
  nlohmann::json doc{
      {"summary",
       {{"alphabet_size", alphabet_size},
        {"min_order", min_order},
        {"max_order", max_order},
        {"classes", rows.size()},
        {"agreements", agreements()},
        {"mismatches", rows.size() - agreements()}}},
      {"mismatches", std::move(mism)}};
  return doc.dump(2);
}

std::string Theorem3Audit::to_text() const {
  std::ostringstream out;
  out << "connected graph classes on " << min_order << ".." << max_order
      << " vertices, n = " << alphabet_size << ": " << rows.size()
      << " classes, " << agreements() << " agree, "
      << rows.size() - agreements() << " mismatch\n";
  for (const auto* r : mismatches()) {
    out << "  mismatch " << r->form.hex() << " edges";
    for (auto [u, v] : r->graph.edges()) out << " " << u << "-" << v;
    out << " | predicate " << (r->flags.all ? "true" : "false")
        << " (connected=" << r->flags.connected
        << " tripartite=" << r->flags.tripartite
        << " chordal63=" << r->flags.chordal63
        << " degree_sum_pair=" << r->flags.degree_sum_pair << ") | "
        << to_string(r->verdict);
    if (r->witness) out << " via " << r->witness->str();
    out << "\n";
  }
  return out.str();
}

Theorem3Audit audit_theorem3(int max_order, int n, AuditOptions options) {
  Theorem3Audit audit;
  audit.alphabet_size = n;
  audit.min_order = options.min_order;
  audit.max_order = max_order;
  for (int order = std::max(1, options.min_order); order <= max_order; ++order) {
    for (auto& g : connected_graph_classes(order, options.class_order_bound)) {
      Theorem3Row row;
      row.form = canonical_form(g);
      row.flags = theorem3_predicate(g);
      auto search = find_representing_word(g, n, options.search);
      if (search.verdict == Verdict::kBoundExceeded) {
        throw BoundExceeded("representability search budget exceeded at order " +
                            std::to_string(order));
      }
      row.verdict = search.verdict;
      row.witness = std::move(search.witness);
      row.graph = std::move(g);
      audit.rows.push_back(std::move(row));
    }
  }
  return audit;
}

}  // namespace lyn

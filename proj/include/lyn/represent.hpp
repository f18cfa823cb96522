#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lyn/graph.hpp"
#include "lyn/words.hpp"

namespace lyn {

inline constexpr int kDefaultIsoOrderBound = 10;
inline constexpr std::uint64_t kDefaultWordBudget = 10'000'000;
inline constexpr int kDefaultClassOrderBound = 6;

/// Complete isomorphism invariant for small graphs: the lexicographically
/// smallest upper-triangle adjacency string over all vertex orders compatible
/// with colour refinement, packed MSB-first.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint8_t> certificate;

  std::string hex() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Bijection phi (phi[v - 1] = image of v) with {u,v} in E(g) iff
/// {phi u, phi v} in E(h), verified before it is returned.
std::optional<std::vector<Vertex>> are_isomorphic(
    const Graph& g, const Graph& h, int max_order = kDefaultIsoOrderBound);

CanonicalForm canonical_form(const Graph& g,
                             int max_order = kDefaultIsoOrderBound);

/// `g` relabelled by its canonical order; isomorphic graphs map to the same
/// labelled graph.
Graph canonical_graph(const Graph& g, int max_order = kDefaultIsoOrderBound);

enum class Verdict { kRepresentable, kNotRepresentable, kBoundExceeded };

std::string to_string(Verdict v);

struct RepresentabilityResult {
  Graph graph;
  int alphabet_size = 0;
  Verdict verdict = Verdict::kNotRepresentable;
  std::optional<Word> witness;
  /// Words scanned in lexicographic order up to and including the witness,
  /// or the whole space when no witness exists.
  std::uint64_t words_examined = 0;
};

struct SearchOptions {
  std::uint64_t max_words = kDefaultWordBudget;
  bool parallel = true;
};

/// Lexicographically first word of length |V(g)| over `n` letters whose
/// Lyndon graph is isomorphic to `g`.
RepresentabilityResult find_representing_word(const Graph& g, int n,
                                              SearchOptions options = {});

/// Every word of length `length` over `n` letters, bucketed by the canonical
/// form of its Lyndon graph. Buckets hold words in lexicographic order.
std::map<CanonicalForm, std::vector<Word>> classify_words(
    std::size_t length, int n, SearchOptions options = {});

/// Proper 3-colouring exists.
bool is_tripartite(const Graph& g);

struct Theorem3Flags {
  bool connected = false;
  bool tripartite = false;
  bool chordal63 = false;
  bool degree_sum_pair = false;
  bool all = false;
};

Theorem3Flags theorem3_predicate(const Graph& g,
                                 int max_order = kDefaultIsoOrderBound);

/// One representative (the canonical graph) per isomorphism class of
/// connected graphs of order `order`, sorted by certificate.
std::vector<Graph> connected_graph_classes(
    int order, int max_order = kDefaultClassOrderBound);

struct Theorem3Row {
  Graph graph;  // canonical representative
  CanonicalForm form;
  Theorem3Flags flags;
  Verdict verdict = Verdict::kNotRepresentable;
  std::optional<Word> witness;
  bool agrees() const {
    return flags.all == (verdict == Verdict::kRepresentable);
  }
};

struct Theorem3Audit {
  int alphabet_size = 3;
  int min_order = 2;
  int max_order = 0;
  std::vector<Theorem3Row> rows;  // by order, then certificate

  std::size_t agreements() const;
  std::vector<const Theorem3Row*> mismatches() const;
  /// {"summary": {...}, "mismatches": [...]}
  std::string to_json() const;
  std::string to_text() const;
};

struct AuditOptions {
  int min_order = 2;
  int class_order_bound = kDefaultClassOrderBound;
  SearchOptions search;
};

/// Compares the characterization predicate against exhaustive search for
/// every connected graph class on min_order..max_order vertices.
Theorem3Audit audit_theorem3(int max_order, int n, AuditOptions options = {});

}  // namespace lyn

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lyn/graph.hpp"
#include "lyn/words.hpp"

namespace lyn {

/// A Lyndon graph together with the word that labels its vertices.
struct LabeledLyndonGraph {
  Graph graph;
  Word word;
};

/// Vertices are the positions 1..|w|; {i, j} with i < j is an edge exactly
/// when w_i precedes w_j in the alphabet.
LabeledLyndonGraph build_lyndon_graph(const Word& w);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// True for a graph with exactly one component (false for the empty graph).
bool is_connected(const Graph& g);

/// Components containing at least one edge.
std::size_t nontrivial_component_count(const Graph& g);

/// Part t holds the positions carrying letter t; one part per alphabet letter.
std::vector<std::vector<Vertex>> letter_partition(const Word& w);

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);

/// Lexicographically smallest edge {u, v} with deg(u) + deg(v) = order.
std::optional<Edge> degree_sum_pair(const Graph& g);

inline constexpr int kDefaultCycleOrderBound = 12;

using Cycle = std::vector<Vertex>;

/// Calls `visit` once per simple cycle of length >= min_length, in canonical
/// form (smallest vertex first, its smaller neighbour second). Returning false
/// from `visit` stops the walk. Throws BoundExceeded above `max_order`.
void for_each_simple_cycle(const Graph& g, int min_length,
                           const std::function<bool(const Cycle&)>& visit,
                           int max_order = kDefaultCycleOrderBound);

std::vector<Cycle> enumerate_simple_cycles(
    const Graph& g, int min_length, int max_order = kDefaultCycleOrderBound);

/// Edges joining non-consecutive vertices of `cycle`.
int chord_count(const Graph& g, const Cycle& cycle);

/// Every simple cycle of length >= r has at least s chords. Requires r > s >= 1.
bool is_rs_chordal(const Graph& g, int r, int s,
                   int max_order = kDefaultCycleOrderBound);

/// Subgraph induced by `vertices` (ascending), relabelled 1..|vertices| in
/// order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace lyn

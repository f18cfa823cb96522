#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lyn/words.hpp"

namespace lyn {

using Vertex = int;  // 1-based
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 1..order. Edges are stored as sorted
/// pairs (i, j) with i < j.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  /// Endpoints may come in either orientation. Throws InvalidArgument on
  /// self-loops, duplicates, or out-of-range endpoints.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::vector<int> degrees() const;  // index v - 1
  std::vector<std::vector<Vertex>> adjacency() const;

  /// Bitmask rows (bit v - 1 of row u - 1) for graphs of order <= 32.
  std::vector<std::uint32_t> adjacency_masks() const;
  static Graph from_masks(std::span<const std::uint32_t> rows);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
};

/// Named small graphs used throughout tests and audits.
Graph complete_graph(int order);
Graph cycle_graph(int order);
Graph path_graph(int order);

/// {"order": N, "edges": [[i, j], ...]} with 1-based sorted pairs.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// Undirected DOT; vertices named by position, optionally annotated with the
/// letter at that position.
std::string graph_to_dot(const Graph& g, const Word* letters = nullptr);

}  // namespace lyn

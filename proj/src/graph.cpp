#include "lyn/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "lyn/error.hpp"

namespace lyn {

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw InvalidArgument("graph order must be non-negative");
}

Graph::Graph(int order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order < 0) throw InvalidArgument("graph order must be non-negative");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > order_) {
      throw InvalidArgument("edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} outside vertex range 1.." +
                            std::to_string(order_));
    }
    if (u == v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("duplicate edge {" + std::to_string(dup->first) +
                          "," + std::to_string(dup->second) + "}");
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(order_), 0);
  for (auto [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u - 1)];
    ++deg[static_cast<std::size_t>(v - 1)];
  }
  return deg;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(order_));
  for (auto [u, v] : edges_) {
    adj[static_cast<std::size_t>(u - 1)].push_back(v);
    adj[static_cast<std::size_t>(v - 1)].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<std::uint32_t> Graph::adjacency_masks() const {
  if (order_ > 32) {
    throw InvalidArgument("adjacency masks need order <= 32");
  }
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(order_), 0);
  for (auto [u, v] : edges_) {
    rows[static_cast<std::size_t>(u - 1)] |= 1U << (v - 1);
    rows[static_cast<std::size_t>(v - 1)] |= 1U << (u - 1);
  }
  return rows;
}

Graph Graph::from_masks(std::span<const std::uint32_t> rows) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(rows.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((rows[static_cast<std::size_t>(u)] >> v) & 1U) {
        edges.emplace_back(u + 1, v + 1);
      }
    }
  }
  return Graph(n, std::move(edges));
}

Graph complete_graph(int order) {
  std::vector<Edge> edges;
  for (int u = 1; u <= order; ++u)
    for (int v = u + 1; v <= order; ++v) edges.emplace_back(u, v);
  return Graph(order, std::move(edges));
}

Graph cycle_graph(int order) {
  if (order < 3) throw InvalidArgument("cycle graphs need order >= 3");
  std::vector<Edge> edges;
  for (int u = 1; u < order; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(1, order);
  return Graph(order, std::move(edges));
}

Graph path_graph(int order) {
  std::vector<Edge> edges;
  for (int u = 1; u < order; ++u) edges.emplace_back(u, u + 1);
  return Graph(order, std::move(edges));
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json doc{{"order", g.order()}, {"edges", std::move(edges)}};
  return doc.dump();
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("edges") ||
      !doc["order"].is_number_integer() || !doc["edges"].is_array()) {
    throw InvalidArgument(
        "graph JSON must look like {\"order\": N, \"edges\": [[i, j], ...]}");
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InvalidArgument("graph JSON edges must be [i, j] integer pairs");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(doc["order"].get<int>(), std::move(edges));
}

std::string graph_to_dot(const Graph& g, const Word* letters) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 1; v <= g.order(); ++v) {
    out << "  " << v;
    if (letters != nullptr && static_cast<std::size_t>(v) <= letters->size()) {
      out << " [label=\"" << v << ":"
          << Alphabet::render((*letters)[static_cast<std::size_t>(v - 1)])
          << "\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lyn

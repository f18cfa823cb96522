#include "lyn/lyngraph.hpp"

#include <algorithm>
#include <numeric>

#include "lyn/error.hpp"

namespace lyn {

LabeledLyndonGraph build_lyndon_graph(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)]) {
        edges.emplace_back(i + 1, j + 1);
      }
    }
  }
  return LabeledLyndonGraph{Graph(n, std::move(edges)), w};
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

std::vector<std::vector<Vertex>> components(const Graph& g) {
  DisjointSets sets(g.order());
  for (auto [u, v] : g.edges()) sets.unite(u - 1, v - 1);
  std::vector<std::vector<Vertex>> out;
  std::vector<int> slot(static_cast<std::size_t>(g.order()), -1);
  // Roots are component minima, so scanning vertices in order yields the
  // components sorted by smallest vertex.
  for (int v = 0; v < g.order(); ++v) {
    const int root = sets.find(v);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(s)].push_back(v + 1);
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::size_t nontrivial_component_count(const Graph& g) {
  std::size_t count = 0;
  for (const auto& c : components(g)) count += c.size() > 1 ? 1 : 0;
  return count;
}

std::vector<std::vector<Vertex>> letter_partition(const Word& w) {
  std::vector<std::vector<Vertex>> parts(
      static_cast<std::size_t>(w.alphabet().size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    parts[w[i]].push_back(static_cast<Vertex>(i + 1));
  }
  return parts;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.has_edge(vertices[a], vertices[b])) return false;
  return true;
}

std::optional<Edge> degree_sum_pair(const Graph& g) {
  const auto deg = g.degrees();
  for (auto [u, v] : g.edges()) {
    if (deg[static_cast<std::size_t>(u - 1)] +
            deg[static_cast<std::size_t>(v - 1)] ==
        g.order()) {
      return Edge{u, v};
    }
  }
  return std::nullopt;
}

void for_each_simple_cycle(const Graph& g, int min_length,
                           const std::function<bool(const Cycle&)>& visit,
                           int max_order) {
  if (g.order() > max_order) {
    throw BoundExceeded("cycle enumeration supports order <= " +
                        std::to_string(max_order) + ", got " +
                        std::to_string(g.order()));
  }
  const auto adj = g.adjacency();
  const int n = g.order();
  min_length = std::max(min_length, 3);
  std::vector<char> on_path(static_cast<std::size_t>(n + 1), 0);
  Cycle path;
  bool stop = false;

  // Paths start at their minimum vertex and only visit larger vertices; a
  // closing edge back to the start yields a cycle, kept when the second
  // vertex is smaller than the last so each cycle appears once.
  std::function<void(Vertex)> extend = [&](Vertex v) {
    for (Vertex next : adj[static_cast<std::size_t>(v - 1)]) {
      if (stop) return;
      if (next == path.front()) {
        if (static_cast<int>(path.size()) >= min_length && path[1] < path.back()) {
          if (!visit(path)) stop = true;
        }
        continue;
      }
      if (next < path.front() || on_path[static_cast<std::size_t>(next)]) continue;
      on_path[static_cast<std::size_t>(next)] = 1;
      path.push_back(next);
      extend(next);
      path.pop_back();
      on_path[static_cast<std::size_t>(next)] = 0;
    }
  };

  for (Vertex start = 1; start <= n && !stop; ++start) {
    path.assign(1, start);
    on_path[static_cast<std::size_t>(start)] = 1;
    extend(start);
    on_path[static_cast<std::size_t>(start)] = 0;
  }
}

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, int min_length,
                                           int max_order) {
  std::vector<Cycle> out;
  for_each_simple_cycle(
      g, min_length,
      [&](const Cycle& c) {
        out.push_back(c);
        return true;
      },
      max_order);
  std::sort(out.begin(), out.end());
  return out;
}

int chord_count(const Graph& g, const Cycle& cycle) {
  const std::size_t len = cycle.size();
  int chords = 0;
  for (std::size_t a = 0; a < len; ++a) {
    for (std::size_t b = a + 2; b < len; ++b) {
      if (a == 0 && b == len - 1) continue;  // closing edge
      if (g.has_edge(cycle[a], cycle[b])) ++chords;
    }
  }
  return chords;
}

bool is_rs_chordal(const Graph& g, int r, int s, int max_order) {
  if (!(r > s && s >= 1)) {
    throw InvalidArgument("(r,s)-chordality needs r > s >= 1, got r = " +
                          std::to_string(r) + ", s = " + std::to_string(s));
  }
  bool chordal = true;
  for_each_simple_cycle(
      g, r,
      [&](const Cycle& c) {
        if (chord_count(g, c) < s) chordal = false;
        return chordal;
      },
      max_order);
  return chordal;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> label(static_cast<std::size_t>(g.order() + 1), 0);
  int previous = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 1 || v > g.order()) {
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " out of range 1.." + std::to_string(g.order()));
    }
    if (v <= previous) throw InvalidArgument("vertex set must be ascending");
    previous = v;
    label[static_cast<std::size_t>(v)] = static_cast<int>(i + 1);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const int lu = label[static_cast<std::size_t>(u)];
    const int lv = label[static_cast<std::size_t>(v)];
    if (lu && lv) edges.emplace_back(lu, lv);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

}  // namespace lyn

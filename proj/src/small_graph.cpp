#include "lyn/detail/small_graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace lyn::detail {

namespace {

int degree(std::uint32_t row) { return std::popcount(row); }

}  // namespace

std::vector<int> refine_colors(std::span<const std::uint32_t> rows) {
  const std::size_t n = rows.size();
  std::vector<int> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = degree(rows[v]);
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (std::size_t u = 0; u < n; ++u) {
        if ((rows[v] >> u) & 1U) sig[v].second.push_back(color[u]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

Canonical canonical_labeling(std::span<const std::uint32_t> rows) {
  const int n = static_cast<int>(rows.size());
  const auto color = refine_colors(rows);

  // Positions are filled class by class in colour order.
  std::vector<int> slot_color(static_cast<std::size_t>(n));
  {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    slot_color = sorted;
  }

  // u and v are twins when swapping them is an automorphism.
  std::vector<std::uint32_t> twins(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const std::uint32_t mask = ~((1U << u) | (1U << v));
      if (u != v && (rows[static_cast<std::size_t>(u)] & mask) ==
                        (rows[static_cast<std::size_t>(v)] & mask)) {
        twins[static_cast<std::size_t>(u)] |= 1U << v;
      }
    }
  }

  const std::size_t total_bits =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::vector<std::uint8_t> best;  // one byte per bit while searching
  std::vector<int> best_order;
  std::vector<std::uint8_t> current;
  current.reserve(total_bits);
  std::vector<int> order;
  std::uint32_t used = 0;
  std::uint64_t generation = 0;

  // `state`: 0 = current prefix equals best's prefix, -1 = already smaller.
  // Whenever best is replaced it extends the current path, so every open
  // frame's prefix then equals best's prefix again.
  std::function<void(int)> place = [&](int state) {
    const int pos = static_cast<int>(order.size());
    if (pos == n) {
      if (best_order.empty() || state < 0) {
        best = current;
        best_order = order;
        ++generation;
      }
      return;
    }
    std::uint32_t tried = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      if (color[static_cast<std::size_t>(v)] != slot_color[static_cast<std::size_t>(pos)]) continue;
      if (twins[static_cast<std::size_t>(v)] & tried) continue;
      tried |= 1U << v;

      const std::size_t mark = current.size();
      int next_state = best_order.empty() ? -1 : state;
      bool pruned = false;
      for (int i = 0; i < pos; ++i) {
        const std::uint8_t bit = static_cast<std::uint8_t>(
            (rows[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> v) & 1U);
        if (next_state == 0) {
          const std::uint8_t ref = best[current.size()];
          if (bit > ref) {
            pruned = true;
            break;
          }
          if (bit < ref) next_state = -1;
        }
        current.push_back(bit);
      }
      if (!pruned) {
        used |= 1U << v;
        order.push_back(v);
        const std::uint64_t before = generation;
        place(next_state);
        if (generation != before) state = 0;
        order.pop_back();
        used &= ~(1U << v);
      }
      current.resize(mark);
    }
  };
  place(0);

  Canonical out;
  out.order = best_order;
  out.bits.assign((total_bits + 7) / 8, 0);
  for (std::size_t i = 0; i < total_bits; ++i) {
    if (best[i]) out.bits[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
  }
  return out;
}

bool is_isomorphism(std::span<const std::uint32_t> g,
                    std::span<const std::uint32_t> h,
                    std::span<const int> phi) {
  const std::size_t n = g.size();
  if (h.size() != n || phi.size() != n) return false;
  std::uint32_t seen = 0;
  for (int image : phi) {
    if (image < 0 || static_cast<std::size_t>(image) >= n || ((seen >> image) & 1U)) {
      return false;
    }
    seen |= 1U << image;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool in_g = (g[u] >> v) & 1U;
      const bool in_h = (h[static_cast<std::size_t>(phi[u])] >> phi[v]) & 1U;
      if (in_g != in_h) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> find_isomorphism(
    std::span<const std::uint32_t> g, std::span<const std::uint32_t> h) {
  const int n = static_cast<int>(g.size());
  if (static_cast<int>(h.size()) != n) return std::nullopt;

  auto profile = [](std::span<const std::uint32_t> rows, int v) {
    std::vector<int> nd;
    for (std::size_t u = 0; u < rows.size(); ++u) {
      if ((rows[static_cast<std::size_t>(v)] >> u) & 1U) nd.push_back(degree(rows[u]));
    }
    std::sort(nd.begin(), nd.end());
    return std::make_pair(degree(rows[static_cast<std::size_t>(v)]), nd);
  };
  std::vector<std::pair<int, std::vector<int>>> pg(static_cast<std::size_t>(n)),
      ph(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    pg[static_cast<std::size_t>(v)] = profile(g, v);
    ph[static_cast<std::size_t>(v)] = profile(h, v);
  }
  {
    auto a = pg;
    auto b = ph;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Match g's vertices in an order that keeps each new vertex adjacent to as
  // many already-placed ones as possible.
  std::vector<int> sequence;
  std::uint32_t placed = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int best_links = -1;
    int best_degree = -1;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      const int links = std::popcount(g[static_cast<std::size_t>(v)] & placed);
      const int d = degree(g[static_cast<std::size_t>(v)]);
      if (links > best_links || (links == best_links && d > best_degree)) {
        pick = v;
        best_links = links;
        best_degree = d;
      }
    }
    sequence.push_back(pick);
    placed |= 1U << pick;
  }

  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::uint32_t taken = 0;
  std::function<bool(int)> match = [&](int step) {
    if (step == n) return true;
    const int v = sequence[static_cast<std::size_t>(step)];
    for (int w = 0; w < n; ++w) {
      if ((taken >> w) & 1U) continue;
      if (pg[static_cast<std::size_t>(v)] != ph[static_cast<std::size_t>(w)]) continue;
      bool consistent = true;
      for (int i = 0; i < step && consistent; ++i) {
        const int u = sequence[static_cast<std::size_t>(i)];
        const bool in_g = (g[static_cast<std::size_t>(v)] >> u) & 1U;
        const bool in_h =
            (h[static_cast<std::size_t>(w)] >> phi[static_cast<std::size_t>(u)]) & 1U;
        consistent = in_g == in_h;
      }
      if (!consistent) continue;
      phi[static_cast<std::size_t>(v)] = w;
      taken |= 1U << w;
      if (match(step + 1)) return true;
      taken &= ~(1U << w);
      phi[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!match(0)) return std::nullopt;
  if (!is_isomorphism(g, h, phi)) return std::nullopt;
  return phi;
}

void lyndon_rows(std::span<const std::uint8_t> letters,
                 std::span<std::uint32_t> rows) {
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) rows[i] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (letters[i] < letters[j]) {
        rows[i] |= 1U << j;
        rows[j] |= 1U << i;
      }
    }
  }
}

}  // namespace lyn::detail

#pragma once

// Bitmask routines for graphs of order <= 32. Row u holds the neighbours of
// vertex u (0-based) as bits.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lyn::detail {

using Rows = std::vector<std::uint32_t>;

/// Stable colour refinement starting from degrees. Colour ids are ranks of
/// label-invariant signatures, so equal graphs up to relabelling get equal
/// colour multisets.
std::vector<int> refine_colors(std::span<const std::uint32_t> rows);

struct Canonical {
  std::vector<int> order;           // position -> vertex
  std::vector<std::uint8_t> bits;   // packed certificate
};

Canonical canonical_labeling(std::span<const std::uint32_t> rows);

/// Backtracking search with degree and neighbour-degree filtering.
/// Result maps vertex u of g to result[u] in h.
std::optional<std::vector<int>> find_isomorphism(
    std::span<const std::uint32_t> g, std::span<const std::uint32_t> h);

bool is_isomorphism(std::span<const std::uint32_t> g,
                    std::span<const std::uint32_t> h,
                    std::span<const int> phi);

/// Rows of the Lyndon graph of `letters` (order <= 32).
void lyndon_rows(std::span<const std::uint8_t> letters,
                 std::span<std::uint32_t> rows);

}  // namespace lyn::detail

#pragma once

// Word-space kernels. Each has a serial reference and an OpenMP version that
// must produce identical results; the tests and the benchmark compare them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lyn/detail/small_graph.hpp"
#include "lyn/stirling.hpp"
#include "lyn/words.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lyn::kernels {

/// k for the word under `interpretation`, or -1 when a strict-decreasing
/// tally skips it. `ends` is scratch space.
int factor_class(std::span<const Letter> letters, Interpretation interpretation,
                 std::vector<std::size_t>& ends);

/// counts[k] for k = 0..length over all n^length words.
std::vector<std::uint64_t> tally_serial(int n, std::size_t length,
                                        Interpretation interpretation);
std::vector<std::uint64_t> tally_parallel(int n, std::size_t length,
                                          Interpretation interpretation);

/// Lexicographic index of the first word whose Lyndon graph is isomorphic to
/// `target`; `total` = n^order.
std::optional<std::uint64_t> first_witness_serial(
    std::span<const std::uint32_t> target, int n, std::uint64_t total);
std::optional<std::uint64_t> first_witness_parallel(
    std::span<const std::uint32_t> target, int n, std::uint64_t total);

/// Canonical certificate of G(w) for every word of the given length, by index.
std::vector<std::vector<std::uint8_t>> certificates_serial(int n,
                                                           std::size_t length,
                                                           std::uint64_t total);
std::vector<std::vector<std::uint8_t>> certificates_parallel(
    int n, std::size_t length, std::uint64_t total);

/// out[i] = f(i) for i in [0, total), evaluated with OpenMP when `parallel`.
/// Order of `out` never depends on scheduling.
template <typename Result, typename F>
std::vector<Result> map_indices(std::uint64_t total, bool parallel, F&& f) {
  std::vector<Result> out(total);
  const auto count = static_cast<std::int64_t>(total);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::uint64_t>(i));
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::uint64_t>(i));
    }
  }
  return out;
}

}  // namespace lyn::kernels

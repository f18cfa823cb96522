#include "doctest.h"
#include "lyn/graph.hpp"
#include "lyn/kernels.hpp"

using namespace lyn;

TEST_CASE("tally kernels agree") {
  for (int n : {1, 2, 3, 4}) {
    for (std::size_t len = 0; len <= (n == 4 ? 6u : 8u); ++len) {
      for (auto interp : {Interpretation::kStrictDecreasing, Interpretation::kDistinctCount}) {
        REQUIRE(kernels::tally_serial(n, len, interp) ==
                kernels::tally_parallel(n, len, interp));
      }
    }
  }
}

TEST_CASE("witness kernels agree") {
  const std::vector<Graph> targets{complete_graph(3), cycle_graph(4), cycle_graph(6),
                                   path_graph(5), Graph(5), complete_graph(4)};
  for (const auto& g : targets) {
    const auto rows = g.adjacency_masks();
    for (int n : {2, 3}) {
      std::uint64_t total = 1;
      for (int i = 0; i < g.order(); ++i) total *= static_cast<std::uint64_t>(n);
      REQUIRE(kernels::first_witness_serial(rows, n, total) ==
              kernels::first_witness_parallel(rows, n, total));
    }
  }
}

TEST_CASE("certificate kernels agree") {
  CHECK(kernels::certificates_serial(3, 5, 243) == kernels::certificates_parallel(3, 5, 243));
}

TEST_CASE("factor_class") {
  std::vector<std::size_t> scratch;
  const std::vector<Letter> aa{0, 0};
  CHECK(kernels::factor_class(aa, Interpretation::kStrictDecreasing, scratch) == -1);
  CHECK(kernels::factor_class(aa, Interpretation::kDistinctCount, scratch) == 1);
  const std::vector<Letter> baba{1, 0, 1, 0};  // b·ab·a
  CHECK(kernels::factor_class(baba, Interpretation::kStrictDecreasing, scratch) == 3);
}

TEST_CASE("map_indices preserves index order") {
  const auto out = kernels::map_indices<std::uint64_t>(1000, true,
                                                       [](std::uint64_t i) { return i * i; });
  for (std::uint64_t i = 0; i < 1000; ++i) REQUIRE(out[i] == i * i);
}

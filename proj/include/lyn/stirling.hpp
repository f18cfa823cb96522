#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lyn/lyndon.hpp"

namespace lyn {

/// How a word contributes to S(N; n, k).
enum class Interpretation {
  /// Only words whose factors are pairwise distinct count; k = factor count.
  kStrictDecreasing,
  /// Every word counts; k = number of distinct factors.
  kDistinctCount,
};

std::string to_string(Interpretation interpretation);
Interpretation parse_interpretation(std::string_view text);

inline constexpr std::uint64_t kDefaultStirlingBudget = 20'000'000;
inline constexpr std::size_t kMaxGeneratingFunctionLength = 64;

struct StirlingTable {
  std::size_t length = 0;  // N
  int alphabet_size = 0;   // n
  Interpretation interpretation = Interpretation::kStrictDecreasing;
  bool convention_k0 = false;
  /// Only l-uniform words were tallied when non-zero.
  std::size_t uniform_multiplicity = 0;
  std::vector<BigInt> counts;  // index k = 0..N

  /// Sum over k >= 1.
  BigInt total() const;
  /// Coefficients lowest degree first, k = 0 included as stored.
  std::vector<BigInt> polynomial() const;

  /// Rows N,n,k,count,interpretation,convention with a header line.
  std::string to_csv() const;
  std::string to_json() const;

  friend bool operator==(const StirlingTable&, const StirlingTable&) = default;
};

/// Sets counts[0] from the flag: 1 under the k = 0 convention, else 0.
StirlingTable with_convention(StirlingTable table, bool convention_k0);

struct StirlingOptions {
  std::uint64_t max_words = kDefaultStirlingBudget;
  bool parallel = true;
};

/// Tallies all n^N words.
StirlingTable stirling_bruteforce(std::size_t length, int n,
                                  Interpretation interpretation,
                                  StirlingOptions options = {});

/// Strict-decreasing table from prod_d (1 + x y^d)^{L_n(d)}, coefficient of y^N.
StirlingTable stirling_gf(std::size_t length, int n);

/// Picks the generating function for strict-decreasing and brute force for
/// distinct-count.
StirlingTable stirling_table(std::size_t length, int n,
                             Interpretation interpretation,
                             StirlingOptions options = {});

/// Coefficients of prod_d (1 - y^d)^{L_n(d)} truncated at y^max_degree.
std::vector<BigInt> necklace_product(int n, std::size_t max_degree);

/// sum_k (-1)^k S(N; n, k), including k = 0 as stored in the table.
BigInt alternating_sum(const StirlingTable& table);

BigInt coin_identity_audit(std::size_t length, int n,
                           Interpretation interpretation, bool convention_k0,
                           StirlingOptions options = {});

struct RealRootReport {
  std::vector<BigInt> coefficients;  // raw, lowest degree first
  int degree = -1;                   // -1 for the zero polynomial
  int distinct_real_roots = 0;
  int squarefree_degree = 0;
  bool all_roots_real = true;
  bool minus_one_is_root = true;
};

/// Exact real-rootedness check by a Sturm sequence on the square-free part.
RealRootReport real_roots_of(std::vector<BigInt> coefficients);

RealRootReport real_roots_audit(std::size_t length, int n,
                                Interpretation interpretation,
                                StirlingOptions options = {});

/// Multinomial (l n)! / (l!)^n.
BigInt uniform_word_count(std::size_t multiplicity, int n);

/// Table over l-uniform words (each letter exactly l times), N = l n.
StirlingTable uniform_table(std::size_t multiplicity, int n,
                            Interpretation interpretation,
                            StirlingOptions options = {});

}  // namespace lyn

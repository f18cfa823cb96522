#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lyn/words.hpp"

namespace lyn {

using BigInt = mpz_class;

/// Chen-Fox-Lyndon factorization: factors are Lyndon, non-increasing, and
/// concatenate to `source`.
struct Factorization {
  Word source;
  std::vector<Word> factors;

  /// Factors joined by a middle dot, e.g. "abcc·ab".
  std::string str() const;
  /// True when no two consecutive factors are equal.
  bool strictly_decreasing() const;
  std::size_t distinct_factor_count() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Lyndon by definition: primitive and minimal in its conjugacy class.
/// Independent of the factorization code; rejects λ.
bool is_lyndon(const Word& w);

/// Linear-time left-to-right factorization. λ gives no factors.
Factorization cfl_factorize(const Word& w);

/// Allocation-free core of cfl_factorize: appends the exclusive end offset of
/// each factor to `ends` (cleared first).
void cfl_factor_ends(std::span<const Letter> letters,
                     std::vector<std::size_t>& ends);

inline constexpr std::size_t kDefaultOracleBound = 14;

/// Exhaustive oracle: tries every cut of `w` and keeps the non-increasing
/// all-Lyndon ones. Throws InternalInconsistency unless exactly one exists,
/// and BoundExceeded when |w| > bound.
Factorization cfl_oracle(const Word& w,
                         std::size_t bound = kDefaultOracleBound);

/// (r, s) with s the longest proper Lyndon suffix of the Lyndon word `l`.
std::pair<Word, Word> standard_factorization(const Word& l);

/// All Lyndon words over `n` letters with length <= max_length, in
/// lexicographic order.
std::vector<Word> generate_lyndon(int n, std::size_t max_length);

/// Möbius function; `d` must be positive.
int mobius(std::uint64_t d);

/// Number of Lyndon words of length exactly `d` over `n` letters.
BigInt witt_count(int n, std::uint64_t d);

}  // namespace lyn

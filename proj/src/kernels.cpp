#include "lyn/kernels.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>

#include "lyn/lyndon.hpp"

namespace lyn::kernels {

int factor_class(std::span<const Letter> letters, Interpretation interpretation,
                 std::vector<std::size_t>& ends) {
  cfl_factor_ends(letters, ends);
  int factors = 0;
  int distinct = 0;
  bool repeated = false;
  std::size_t begin = 0;
  std::size_t prev_begin = 0;
  std::size_t prev_len = 0;
  for (std::size_t end : ends) {
    const std::size_t len = end - begin;
    // Equal factors are adjacent in a non-increasing factorization.
    const bool same = factors > 0 && len == prev_len &&
                      std::equal(letters.begin() + static_cast<std::ptrdiff_t>(begin),
                                 letters.begin() + static_cast<std::ptrdiff_t>(end),
                                 letters.begin() + static_cast<std::ptrdiff_t>(prev_begin));
    if (same) {
      repeated = true;
    } else {
      ++distinct;
    }
    ++factors;
    prev_begin = begin;
    prev_len = len;
    begin = end;
  }
  if (interpretation == Interpretation::kDistinctCount) return distinct;
  return repeated ? -1 : factors;
}

namespace {

std::uint64_t power(int n, std::size_t length) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

// Advances `letters` to the next word in lexicographic order.
void increment(std::span<Letter> letters, int n) {
  for (std::size_t i = letters.size(); i-- > 0;) {
    if (++letters[i] < n) return;
    letters[i] = 0;
  }
}

struct Profile {
  std::size_t edges = 0;
  std::vector<int> degrees;  // sorted
};

Profile profile_of(std::span<const std::uint32_t> rows) {
  Profile p;
  p.degrees.reserve(rows.size());
  for (auto r : rows) p.degrees.push_back(std::popcount(r));
  std::sort(p.degrees.begin(), p.degrees.end());
  for (int d : p.degrees) p.edges += static_cast<std::size_t>(d);
  p.edges /= 2;
  return p;
}

bool matches(std::span<const Letter> letters, std::span<const std::uint32_t> target,
             const Profile& want, detail::Rows& rows) {
  detail::lyndon_rows(letters, rows);
  const Profile got = profile_of(rows);
  if (got.edges != want.edges || got.degrees != want.degrees) return false;
  return detail::find_isomorphism(rows, target).has_value();
}

}  // namespace

std::vector<std::uint64_t> tally_serial(int n, std::size_t length,
                                        Interpretation interpretation) {
  std::vector<std::uint64_t> counts(length + 1, 0);
  const std::uint64_t total = power(n, length);
  std::vector<Letter> letters(length, 0);
  std::vector<std::size_t> ends;
  for (std::uint64_t i = 0; i < total; ++i) {
    const int k = factor_class(letters, interpretation, ends);
    if (k >= 0) ++counts[static_cast<std::size_t>(k)];
    increment(letters, n);
  }
  return counts;
}

std::vector<std::uint64_t> tally_parallel(int n, std::size_t length,
                                          Interpretation interpretation) {
  std::vector<std::uint64_t> counts(length + 1, 0);
  const std::uint64_t total = power(n, length);
  constexpr std::uint64_t kBlock = 4096;
  const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(length + 1, 0);
    std::vector<Letter> letters(length, 0);
    std::vector<std::size_t> ends;
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlock;
      const std::uint64_t last = std::min(total, first + kBlock);
      letters_at_index(n, first, letters);
      for (std::uint64_t i = first; i < last; ++i) {
        const int k = factor_class(letters, interpretation, ends);
        if (k >= 0) ++local[static_cast<std::size_t>(k)];
        increment(letters, n);
      }
    }
#pragma omp critical
    for (std::size_t k = 0; k <= length; ++k) counts[k] += local[k];
  }
  return counts;
}

std::optional<std::uint64_t> first_witness_serial(
    std::span<const std::uint32_t> target, int n, std::uint64_t total) {
  const std::size_t length = target.size();
  const Profile want = profile_of(target);
  std::vector<Letter> letters(length, 0);
  detail::Rows rows(length);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (matches(letters, target, want, rows)) return i;
    increment(letters, n);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_witness_parallel(
    std::span<const std::uint32_t> target, int n, std::uint64_t total) {
  const std::size_t length = target.size();
  const Profile want = profile_of(target);
  std::atomic<std::uint64_t> best{total};
  constexpr std::uint64_t kBlock = 256;
  const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
#pragma omp parallel
  {
    std::vector<Letter> letters(length, 0);
    detail::Rows rows(length);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlock;
      if (first >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t last = std::min(total, first + kBlock);
      letters_at_index(n, first, letters);
      for (std::uint64_t i = first; i < last; ++i) {
        if (matches(letters, target, want, rows)) {
          std::uint64_t seen = best.load();
          while (i < seen && !best.compare_exchange_weak(seen, i)) {
          }
          break;
        }
        increment(letters, n);
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == total) return std::nullopt;
  return found;
}

std::vector<std::vector<std::uint8_t>> certificates_serial(int n,
                                                           std::size_t length,
                                                           std::uint64_t total) {
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(total);
  std::vector<Letter> letters(length, 0);
  detail::Rows rows(length);
  for (std::uint64_t i = 0; i < total; ++i) {
    detail::lyndon_rows(letters, rows);
    out.push_back(detail::canonical_labeling(rows).bits);
    increment(letters, n);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> certificates_parallel(
    int n, std::size_t length, std::uint64_t total) {
  std::vector<std::vector<std::uint8_t>> out(total);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<Letter> letters(length, 0);
    detail::Rows rows(length);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      letters_at_index(n, static_cast<std::uint64_t>(i), letters);
      detail::lyndon_rows(letters, rows);
      out[static_cast<std::size_t>(i)] = detail::canonical_labeling(rows).bits;
    }
  }
  return out;
}

}  // namespace lyn::kernels

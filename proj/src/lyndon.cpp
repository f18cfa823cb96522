#include "lyn/lyndon.hpp"

#include <algorithm>

#include "lyn/error.hpp"

namespace lyn {

std::string Factorization::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "·";
    out += factors[i].str();
  }
  return out;
}

bool Factorization::strictly_decreasing() const {
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] == factors[i - 1]) return false;
  }
  return true;
}

std::size_t Factorization::distinct_factor_count() const {
  // Equal factors are adjacent in a non-increasing sequence.
  std::size_t count = factors.empty() ? 0 : 1;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i] != factors[i - 1]) ++count;
  }
  return count;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw InvalidArgument("Lyndon property is undefined for λ");
  if (!is_primitive(w)) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (lex_compare(w.rotate(k), w) < 0) return false;
  }
  return true;
}

// Duval's algorithm.
void cfl_factor_ends(std::span<const Letter> s, std::vector<std::size_t>& ends) {
  ends.clear();
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && s[k] <= s[j]) {
      k = s[k] < s[j] ? i : k + 1;
      ++j;
    }
    const std::size_t period = j - k;
    while (i <= k) {
      i += period;
      ends.push_back(i);
    }
  }
}

Factorization cfl_factorize(const Word& w) {
  std::vector<std::size_t> ends;
  cfl_factor_ends(w.letters(), ends);
  Factorization f{w, {}};
  f.factors.reserve(ends.size());
  std::size_t begin = 0;
  for (std::size_t end : ends) {
    f.factors.push_back(w.substr(begin, end - begin));
    begin = end;
  }
  return f;
}

Factorization cfl_oracle(const Word& w, std::size_t bound) {
  if (w.size() > bound) {
    throw BoundExceeded("cfl_oracle: |w| = " + std::to_string(w.size()) +
                        " exceeds oracle bound " + std::to_string(bound));
  }
  if (w.empty()) return Factorization{w, {}};
  const std::size_t n = w.size();
  std::vector<Factorization> found;
  // Bit i of `cuts` set means a cut after position i + 1.
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<Word> factors;
    std::size_t begin = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const bool last = i + 1 == n;
      if (last || ((cuts >> i) & 1U)) {
        Word factor = w.substr(begin, i + 1 - begin);
        ok = is_lyndon(factor) &&
             (factors.empty() || lex_compare(factors.back(), factor) >= 0);
        factors.push_back(std::move(factor));
        begin = i + 1;
      }
    }
    if (ok) found.push_back(Factorization{w, std::move(factors)});
  }
  if (found.size() != 1) {
    throw InternalInconsistency("cfl_oracle: " + std::to_string(found.size()) +
                                " non-increasing Lyndon factorizations of " +
                                w.str());
  }
  return found.front();
}

std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.size() < 2 || !is_lyndon(l)) {
    throw InvalidArgument("standard factorization needs a Lyndon word of "
                          "length >= 2, got \"" + l.str() + "\"");
  }
  for (std::size_t cut = 1; cut < l.size(); ++cut) {
    Word suffix = l.substr(cut, l.size() - cut);
    if (is_lyndon(suffix)) return {l.substr(0, cut), std::move(suffix)};
  }
  // Every single letter is Lyndon, so the loop always returns.
  throw InternalInconsistency("no proper Lyndon suffix of " + l.str());
}

std::vector<Word> generate_lyndon(int n, std::size_t max_length) {
  const Alphabet alphabet(n);
  std::vector<Word> out;
  if (max_length == 0) return out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    std::vector<Letter> letters(w.begin(), w.end());
    out.emplace_back(alphabet, std::move(letters));
    const std::size_t m = w.size();
    while (w.size() < max_length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
  }
  return out;
}

int mobius(std::uint64_t d) {
  if (d == 0) throw InvalidArgument("mobius: argument must be positive");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

BigInt witt_count(int n, std::uint64_t d) {
  if (n < 1 || d < 1) throw InvalidArgument("witt_count needs n >= 1, d >= 1");
  BigInt sum = 0;
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(d / e));
    sum += mu * power;
  }
  return sum / BigInt(static_cast<unsigned long>(d));
}

}  // namespace lyn

#include "lyn/stirling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lyn/error.hpp"
#include "lyn/kernels.hpp"

namespace lyn {

std::string to_string(Interpretation interpretation) {
  return interpretation == Interpretation::kStrictDecreasing ? "strict-decreasing"
                                                             : "distinct-count";
}

Interpretation parse_interpretation(std::string_view text) {
  if (text == "strict-decreasing" || text == "strict") {
    return Interpretation::kStrictDecreasing;
  }
  if (text == "distinct-count" || text == "distinct") {
    return Interpretation::kDistinctCount;
  }
  throw InvalidArgument("unknown interpretation \"" + std::string(text) +
                        "\" (expected strict-decreasing or distinct-count)");
}

BigInt StirlingTable::total() const {
  BigInt sum = 0;
  for (std::size_t k = 1; k < counts.size(); ++k) sum += counts[k];
  return sum;
}

std::vector<BigInt> StirlingTable::polynomial() const { return counts; }

namespace {

const char* convention_name(bool convention_k0) {
  return convention_k0 ? "k0-is-1" : "raw";
}

std::string json_int_list(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get_str();
  }
  return out + "]";
}

}  // namespace

std::string StirlingTable::to_csv() const {
  std::ostringstream out;
  out << "N,n,k,count,interpretation,convention\n";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    out << length << ',' << alphabet_size << ',' << k << ','
        << counts[k].get_str() << ',' << to_string(interpretation) << ','
        << convention_name(convention_k0) << '\n';
  }
  return out.str();
}

std::string StirlingTable::to_json() const {
  std::ostringstream out;
  out << "{\"N\": " << length << ", \"n\": " << alphabet_size
      << ", \"interpretation\": \"" << to_string(interpretation)
      << "\", \"convention\": \"" << convention_name(convention_k0) << "\"";
  if (uniform_multiplicity > 0) {
    out << ", \"uniform_multiplicity\": " << uniform_multiplicity;
  }
  out << ", \"counts\": " << json_int_list(counts) << "}";
  return out.str();
}

StirlingTable with_convention(StirlingTable table, bool convention_k0) {
  table.convention_k0 = convention_k0;
  if (table.counts.empty()) table.counts.resize(1);
  table.counts[0] = convention_k0 ? 1 : 0;
  return table;
}

namespace {

StirlingTable make_table(std::size_t length, int n, Interpretation interpretation,
                         const std::vector<std::uint64_t>& raw) {
  StirlingTable t;
  t.length = length;
  t.alphabet_size = n;
  t.interpretation = interpretation;
  t.counts.reserve(raw.size());
  for (auto c : raw) t.counts.emplace_back(static_cast<unsigned long>(c));
  return with_convention(std::move(t), false);
}

}  // namespace

StirlingTable stirling_bruteforce(std::size_t length, int n,
                                  Interpretation interpretation,
                                  StirlingOptions options) {
  (void)Alphabet(n);
  word_space_size(n, length, options.max_words);
  const auto raw = options.parallel
                       ? kernels::tally_parallel(n, length, interpretation)
                       : kernels::tally_serial(n, length, interpretation);
  return make_table(length, n, interpretation, raw);
}

StirlingTable stirling_gf(std::size_t length, int n) {
  (void)Alphabet(n);
  if (length > kMaxGeneratingFunctionLength) {
    throw BoundExceeded("generating-function tables support N <= " +
                        std::to_string(kMaxGeneratingFunctionLength));
  }
  const std::size_t N = length;
  // series[m][k]: coefficient of y^m x^k.
  std::vector<std::vector<BigInt>> series(N + 1, std::vector<BigInt>(N + 1, 0));
  series[0][0] = 1;
  for (std::size_t d = 1; d <= N; ++d) {
    const BigInt lyndon_words = witt_count(n, d);
    std::vector<BigInt> binom(N / d + 1);
    for (std::size_t j = 0; j < binom.size(); ++j) {
      mpz_bin_ui(binom[j].get_mpz_t(), lyndon_words.get_mpz_t(),
                 static_cast<unsigned long>(j));
    }
    auto next = series;
    for (std::size_t m = 0; m <= N; ++m) {
      for (std::size_t k = 0; k <= N; ++k) {
        if (series[m][k] == 0) continue;
        for (std::size_t j = 1; j < binom.size() && m + d * j <= N && k + j <= N; ++j) {
          next[m + d * j][k + j] += binom[j] * series[m][k];
        }
      }
    }
    series = std::move(next);
  }
  StirlingTable t;
  t.length = length;
  t.alphabet_size = n;
  t.interpretation = Interpretation::kStrictDecreasing;
  t.counts = series[N];
  return with_convention(std::move(t), false);
}

StirlingTable stirling_table(std::size_t length, int n,
                             Interpretation interpretation,
                             StirlingOptions options) {
  if (interpretation == Interpretation::kStrictDecreasing &&
      length <= kMaxGeneratingFunctionLength) {
    return stirling_gf(length, n);
  }
  return stirling_bruteforce(length, n, interpretation, options);
}

std::vector<BigInt> necklace_product(int n, std::size_t max_degree) {
  std::vector<BigInt> series(max_degree + 1, 0);
  series[0] = 1;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    const BigInt lyndon_words = witt_count(n, d);
    std::vector<BigInt> factor(max_degree / d + 1);
    for (std::size_t j = 0; j < factor.size(); ++j) {
      mpz_bin_ui(factor[j].get_mpz_t(), lyndon_words.get_mpz_t(),
                 static_cast<unsigned long>(j));
      if (j % 2 == 1) factor[j] = -factor[j];
    }
    std::vector<BigInt> next(max_degree + 1, 0);
    for (std::size_t m = 0; m <= max_degree; ++m) {
      if (series[m] == 0) continue;
      for (std::size_t j = 0; j < factor.size() && m + d * j <= max_degree; ++j) {
        next[m + d * j] += factor[j] * series[m];
      }
    }
    series = std::move(next);
  }
  return series;
}

BigInt alternating_sum(const StirlingTable& table) {
  BigInt sum = 0;
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    if (k % 2 == 0) {
      sum += table.counts[k];
    } else {
      sum -= table.counts[k];
    }
  }
  return sum;
}

BigInt coin_identity_audit(std::size_t length, int n,
                           Interpretation interpretation, bool convention_k0,
                           StirlingOptions options) {
  return alternating_sum(with_convention(
      stirling_table(length, n, interpretation, options), convention_k0));
}

namespace {

using RationalPoly = std::vector<mpq_class>;  // lowest degree first

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RationalPoly& p) { return static_cast<int>(p.size()) - 1; }

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * static_cast<long>(i));
  }
  trim(d);
  return d;
}

// Returns the remainder of a / b; b non-zero.
RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  trim(a);
  while (degree(a) >= degree(b)) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RationalPoly quotient(RationalPoly a, const RationalPoly& b) {
  trim(a);
  if (degree(a) < degree(b)) return {};
  RationalPoly q(a.size() - b.size() + 1, 0);
  while (degree(a) >= degree(b)) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

int sign(const mpq_class& q) { return sgn(q); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

RealRootReport real_roots_of(std::vector<BigInt> coefficients) {
  RealRootReport report;
  RationalPoly p;
  for (const auto& c : coefficients) p.emplace_back(c);
  trim(p);
  report.coefficients = std::move(coefficients);
  report.degree = degree(p);
  if (p.empty()) return report;  // zero polynomial: vacuous

  BigInt at_minus_one = 0;
  for (std::size_t i = 0; i < report.coefficients.size(); ++i) {
    if (i % 2 == 0) {
      at_minus_one += report.coefficients[i];
    } else {
      at_minus_one -= report.coefficients[i];
    }
  }
  report.minus_one_is_root = at_minus_one == 0;

  const RationalPoly squarefree = quotient(p, gcd(p, derivative(p)));
  report.squarefree_degree = degree(squarefree);

  std::vector<RationalPoly> chain{squarefree, derivative(squarefree)};
  while (!chain.back().empty()) {
    RationalPoly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  chain.pop_back();

  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const auto& s : chain) {
    const int lead = sign(s.back());
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(degree(s) % 2 == 0 ? lead : -lead);
  }
  report.distinct_real_roots = sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
  report.all_roots_real = report.distinct_real_roots == report.squarefree_degree;
  return report;
}

RealRootReport real_roots_audit(std::size_t length, int n,
                                Interpretation interpretation,
                                StirlingOptions options) {
  auto table = with_convention(stirling_table(length, n, interpretation, options),
                               false);
  return real_roots_of(std::move(table.counts));
}

BigInt uniform_word_count(std::size_t multiplicity, int n) {
  BigInt count;
  mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(multiplicity) *
                                    static_cast<unsigned long>(n));
  BigInt block;
  mpz_fac_ui(block.get_mpz_t(), static_cast<unsigned long>(multiplicity));
  for (int i = 0; i < n; ++i) count /= block;
  return count;
}

StirlingTable uniform_table(std::size_t multiplicity, int n,
                            Interpretation interpretation,
                            StirlingOptions options) {
  (void)Alphabet(n);
  if (multiplicity < 1) throw InvalidArgument("uniform multiplicity must be >= 1");
  const BigInt words = uniform_word_count(multiplicity, n);
  if (words > BigInt(static_cast<unsigned long>(options.max_words))) {
    throw BoundExceeded(words.get_str() + " uniform words exceed the budget of " +
                        std::to_string(options.max_words));
  }
  const std::size_t length = multiplicity * static_cast<std::size_t>(n);
  std::vector<Letter> letters;
  letters.reserve(length);
  for (int a = 0; a < n; ++a) letters.insert(letters.end(), multiplicity, static_cast<Letter>(a));

  std::vector<std::uint64_t> raw(length + 1, 0);
  std::vector<std::size_t> ends;
  do {
    const int k = kernels::factor_class(letters, interpretation, ends);
    if (k >= 0) ++raw[static_cast<std::size_t>(k)];
  } while (std::next_permutation(letters.begin(), letters.end()));

  StirlingTable t = make_table(length, n, interpretation, raw);
  t.uniform_multiplicity = multiplicity;
  return t;
}

}  // namespace lyn

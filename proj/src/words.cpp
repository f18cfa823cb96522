#include "lyn/words.hpp"

#include <algorithm>
#include <limits>

#include "lyn/error.hpp"

namespace lyn {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > kMaxSize) {
    throw InvalidArgument("alphabet size must be in 1..26, got " +
                          std::to_string(size));
  }
}

Word::Word(Alphabet alphabet) : alphabet_(alphabet) {}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (!alphabet_.contains(a)) {
      throw InvalidArgument("letter index " + std::to_string(a) +
                            " outside alphabet of size " +
                            std::to_string(alphabet_.size()));
    }
  }
}

namespace {

std::vector<Letter> decode(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw InvalidArgument(std::string("invalid letter '") + c +
                            "': words use lowercase ASCII only");
    }
    letters.push_back(static_cast<Letter>(c - 'a'));
  }
  return letters;
}

}  // namespace

Word Word::parse(std::string_view text) {
  auto letters = decode(text);
  int size = 1;
  for (Letter a : letters) size = std::max(size, a + 1);
  return Word(Alphabet(size), std::move(letters));
}

Word Word::parse(std::string_view text, int alphabet_size) {
  return Word(Alphabet(alphabet_size), decode(text));
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter a : letters_) out.push_back(Alphabet::render(a));
  return out;
}

Word Word::concat(const Word& other) const {
  if (alphabet_ != other.alphabet_) {
    throw InvalidArgument("cannot concatenate words over different alphabets");
  }
  Word out(alphabet_);
  out.letters_.reserve(size() + other.size());
  out.letters_ = letters_;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(),
                      other.letters_.end());
  return out;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size()) throw InvalidArgument("substr position out of range");
  len = std::min(len, size() - pos);
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

Word Word::rotate(std::size_t k) const {
  Word out = *this;
  if (!out.letters_.empty()) {
    std::rotate(out.letters_.begin(),
                out.letters_.begin() +
                    static_cast<std::ptrdiff_t>(k % out.letters_.size()),
                out.letters_.end());
  }
  return out;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  auto c = std::lexicographical_compare_three_way(
      u.letters_.begin(), u.letters_.end(), v.letters_.begin(),
      v.letters_.end());
  if (c != 0) return c;
  return u.alphabet_.size() <=> v.alphabet_.size();
}

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw InvalidArgument("lex_compare: words over different alphabets");
  }
  auto a = u.letters();
  auto b = v.letters();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

Word subword_at(const Word& w, std::span<const int> positions) {
  std::vector<Letter> letters;
  letters.reserve(positions.size());
  int previous = 0;
  for (int p : positions) {
    if (p < 1 || static_cast<std::size_t>(p) > w.size()) {
      throw InvalidArgument("position " + std::to_string(p) +
                            " out of range 1.." + std::to_string(w.size()));
    }
    if (p <= previous) {
      throw InvalidArgument("positions must be strictly ascending");
    }
    previous = p;
    letters.push_back(w[static_cast<std::size_t>(p - 1)]);
  }
  return Word(w.alphabet(), std::move(letters));
}

std::size_t letter_count(const Word& w, Letter a) {
  if (!w.alphabet().contains(a)) {
    throw InvalidArgument("letter outside alphabet");
  }
  auto letters = w.letters();
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), a));
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw InvalidArgument("primitivity is undefined for λ");
  const std::size_t n = w.size();
  for (std::size_t root = 1; root < n; ++root) {
    if (n % root != 0) continue;
    bool periodic = true;
    for (std::size_t i = root; i < n && periodic; ++i) {
      periodic = w[i] == w[i - root];
    }
    if (periodic) return false;
  }
  return true;
}

std::vector<Word> conjugacy_class(const Word& w) {
  if (w.empty()) throw InvalidArgument("conjugacy class is undefined for λ");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(w.rotate(k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t word_space_size(int n, std::size_t length, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (total > budget / static_cast<std::uint64_t>(n)) {
      throw BoundExceeded(std::to_string(n) + "^" + std::to_string(length) +
                          " words exceed the budget of " +
                          std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(n);
  }
  if (total > budget) {
    throw BoundExceeded(std::to_string(n) + "^" + std::to_string(length) +
                        " words exceed the budget of " + std::to_string(budget));
  }
  return total;
}

void letters_at_index(int n, std::uint64_t index, std::span<Letter> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Letter>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
}

Word word_at_index(Alphabet alphabet, std::size_t length, std::uint64_t index) {
  std::vector<Letter> letters(length);
  letters_at_index(alphabet.size(), index, letters);
  return Word(alphabet, std::move(letters));
}

}  // namespace lyn

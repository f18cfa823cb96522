#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lyn {

using Letter = std::uint8_t;

/// Ordered alphabet of 1..26 letters. Letter i renders as the i-th lowercase
/// ASCII letter and index order is alphabet order.
class Alphabet {
 public:
  static constexpr int kMaxSize = 26;

  constexpr Alphabet() = default;
  explicit Alphabet(int size);

  constexpr int size() const { return size_; }
  bool contains(Letter a) const { return a < size_; }
  static char render(Letter a) { return static_cast<char>('a' + a); }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  int size_ = 1;
};

/// Finite word over an Alphabet. The empty word is valid.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet);
  Word(Alphabet alphabet, std::vector<Letter> letters);

  /// Parses lowercase ASCII. Without an explicit size the alphabet is the
  /// smallest one containing every letter of `text` (size 1 for the empty
  /// string).
  static Word parse(std::string_view text);
  static Word parse(std::string_view text, int alphabet_size);

  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }

  /// 0-based access.
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::string str() const;

  Word concat(const Word& other) const;
  Word substr(std::size_t pos, std::size_t len) const;
  Word rotate(std::size_t k) const;

  /// Lexicographic on letters, then alphabet size; suitable as a container key.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Lexicographic order with the proper-prefix rule. Throws InvalidArgument
/// when the alphabets differ.
std::strong_ordering lex_compare(const Word& u, const Word& v);

/// Letters of `w` at the given 1-based, strictly ascending positions.
Word subword_at(const Word& w, std::span<const int> positions);

std::size_t letter_count(const Word& w, Letter a);

/// Whether `w` is not u^k for any k >= 2. Rejects the empty word.
bool is_primitive(const Word& w);

/// All distinct rotations of `w`, sorted lexicographically. Rejects λ.
std::vector<Word> conjugacy_class(const Word& w);

/// Number of words of length `length` over `n` letters, or throws
/// BoundExceeded when it exceeds `budget`.
std::uint64_t word_space_size(int n, std::size_t length, std::uint64_t budget);

/// The `index`-th word of length `length` in lexicographic order.
Word word_at_index(Alphabet alphabet, std::size_t length, std::uint64_t index);

/// Writes the `index`-th word into `out` (size = length) without allocating.
void letters_at_index(int n, std::uint64_t index, std::span<Letter> out);

}  // namespace lyn

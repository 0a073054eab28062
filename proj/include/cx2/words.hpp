#ifndef CX2_WORDS_HPP_
#define CX2_WORDS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cx2 {

/// Error raised while parsing word/relation text. `offset` is the 0-based
/// position of the offending character in the input.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
};

/// A signed generator: one of a..z with sign +1, printed lowercase, or
/// sign -1, printed uppercase.
struct Letter {
  char generator;  // 'a'..'z'
  int sign;        // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;

  Letter inverse() const { return {generator, -sign}; }
  char to_char() const {
    return sign > 0 ? generator : static_cast<char>(generator - 'a' + 'A');
  }
  static Letter from_char(char c);

  /// Rank used for all lexicographic orders: a < A < b < B < ... < z < Z.
  int rank() const { return 2 * (generator - 'a') + (sign < 0 ? 1 : 0); }
};

/// A finite sequence of letters. Makes no reducedness promise by itself.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  friend bool operator==(const Word&, const Word&) = default;
};

/// Maximal run of one generator with a signed, nonzero exponent.
struct Syllable {
  char generator;
  long long exponent;  // != 0

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Parses text in the word grammar: letters a-z or A-Z, each optionally
/// followed by `^` and a positive decimal exponent; whitespace ignored.
/// Uppercase letters carry sign -1. Exponents are expanded in full.
Word parse_word(std::string_view text);

/// Parses either a bare word or `lhs = rhs`. A relation yields the relator
/// lhs * rhs^-1 with no free reduction applied, so its length is always
/// len(lhs) + len(rhs).
Word parse_relation(std::string_view text);

/// Canonical printed form: fully expanded, lowercase/uppercase letters,
/// no `^` shorthand. parse_word(to_string(w)) == w.
std::string to_string(const Word& w);

/// Formal inverse: reversed sequence with all signs flipped.
Word invert(const Word& w);

/// Concatenation.
Word operator*(const Word& a, const Word& b);

/// w repeated e times (e < 0 uses the inverse). pow(w, 0) is empty.
Word pow(const Word& w, long long e);

/// The unique freely reduced word obtained by deleting adjacent inverse
/// pairs until none remain. Idempotent.
Word free_reduce(const Word& w);

/// Free reduction followed by stripping of inverse first/last pairs.
Word cyclic_reduce(const Word& w);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Splits a freely reduced word into maximal single-generator runs.
/// Throws std::invalid_argument when w is not freely reduced.
std::vector<Syllable> syllables(const Word& w);

/// Syllable count of the cyclic word: the linear count, minus one when the
/// first and last syllables share a generator and merge around the seam.
/// Requires w cyclically reduced.
std::size_t cyclic_syllable_count(const Word& w);

/// The alternating word x y x y ... of length m, starting with x.
Word artin_word(char x, char y, int m);

/// Pure lexicographic order on words using Letter::rank.
bool lex_less(const Word& a, const Word& b);

/// Length first, then lexicographic.
bool length_lex_less(const Word& a, const Word& b);

/// Lex-least word among all rotations of w and all rotations of invert(w).
/// Canonical representative of a face boundary read from an arbitrary base
/// point in either direction.
Word canonical_cyclic(const Word& w);

/// Rotation moving position k of w to the front.
Word rotate(const Word& w, std::size_t k);

}  // namespace cx2

#endif  // CX2_WORDS_HPP_

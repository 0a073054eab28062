#include <algorithm>
#include <random>

#include "doctest.h"

#include "cx2/words.hpp"

using namespace cx2;

namespace {

Word W(const char* s) { return parse_word(s); }

// Reference reducer: repeatedly delete a randomly chosen adjacent inverse
// pair. Free reduction is confluent, so every deletion order must land on
// the same word.
Word reduce_any_order(Word w, std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w.letters[i + 1] == w.letters[i].inverse()) sites.push_back(i);
    }
    if (sites.empty()) return w;
    std::size_t at = sites[rng() % sites.size()];
    w.letters.erase(w.letters.begin() + at, w.letters.begin() + at + 2);
  }
}

Word random_word(std::mt19937& rng, int max_len, int num_gens = 3) {
  int len = static_cast<int>(rng() % (max_len + 1));
  Word w;
  for (int i = 0; i < len; ++i) {
    w.letters.push_back({static_cast<char>('a' + rng() % num_gens),
                         rng() % 2 ? 1 : -1});
  }
  return w;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("parsing letters, exponents and whitespace") {
  CHECK(to_string(W("a")) == "a");
  CHECK(to_string(W("aB")) == "aB");
  CHECK(to_string(W("a^3 B^2")) == "aaaBB");
  CHECK(to_string(W("  a  b\tC ")) == "abC");
  CHECK(to_string(W("")) == "");
  CHECK(W("A^2") == Word({{'a', -1}, {'a', -1}}));
}

TEST_CASE("parse errors carry the offending offset") {
  auto offset_of = [](const char* text) {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return static_cast<long long>(e.offset);
    }
    return -1LL;
  };
  CHECK(offset_of("ab?") == 2);
  // Exponent problems point at the '^' that starts the construct.
  CHECK(offset_of("a^") == 1);
  CHECK(offset_of("a^0") == 1);
  CHECK(offset_of("^2") == 0);
  CHECK(offset_of("a^2000000") == 1);  // exponent above the expansion guard
  CHECK(offset_of("ab=ba") == 2);      // '=' is not word syntax
}

TEST_CASE("relations become relators lhs * rhs^-1, unreduced") {
  CHECK(to_string(parse_relation("abc = cba")) == "abcABC");
  CHECK(to_string(parse_relation("aaBBB")) == "aaBBB");  // bare word form
  CHECK(to_string(parse_relation("a^2 = b^3")) == "aaBBB");
  // The relator keeps both sides in full even when they cancel.
  CHECK(to_string(parse_relation("ab = ab")) == "abBA");
  CHECK_THROWS_AS(parse_relation("a = b = c"), ParseError);
}

TEST_CASE("free reduction matches any-order deletion") {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_word(rng, 12);
    Word expected = reduce_any_order(w, rng);
    CHECK(free_reduce(w) == expected);
  }
}

TEST_CASE("free reduction basics") {
  CHECK(free_reduce(W("aA")) == W(""));
  CHECK(free_reduce(W("abBA")) == W(""));
  CHECK(free_reduce(W("abBc")) == W("ac"));
  CHECK(is_freely_reduced(W("aB")));
  CHECK(!is_freely_reduced(W("aAb")));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 20);
    CHECK(free_reduce(w * invert(w)).empty());
    CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
  }
}

TEST_CASE("cyclic reduction strips matched ends") {
  CHECK(cyclic_reduce(W("abcBA")) == W("c"));
  CHECK(cyclic_reduce(W("aa")) == W("aa"));
  CHECK(cyclic_reduce(W("aBA")) == W("B"));
  CHECK(cyclic_reduce(W("aA")) == W(""));
  CHECK(is_cyclically_reduced(W("aabAAb")));
  CHECK(!is_cyclically_reduced(W("aabA")));
}

TEST_CASE("syllables of reduced words") {
  auto sy = syllables(W("aaabbAA"));
  REQUIRE(sy.size() == 3);
  CHECK(sy[0] == Syllable{'a', 3});
  CHECK(sy[1] == Syllable{'b', 2});
  CHECK(sy[2] == Syllable{'a', -2});
  CHECK(syllables(W("")).empty());
  CHECK_THROWS_AS(syllables(W("aAb")), std::invalid_argument);
}

TEST_CASE("cyclic syllable count merges the seam") {
  CHECK(cyclic_syllable_count(W("aabAAb")) == 4);  // a..b: no merge
  CHECK(cyclic_syllable_count(W("aaBBa")) == 2);   // a-run wraps around
  CHECK(cyclic_syllable_count(W("aaa")) == 1);
  CHECK(cyclic_syllable_count(W("abAB")) == 4);
}

TEST_CASE("cyclic syllable count is rotation invariant") {
  std::mt19937 rng(99);
  int tested = 0;
  while (tested < 200) {
    Word w = cyclic_reduce(random_word(rng, 10));
    if (w.empty()) continue;
    ++tested;
    std::size_t count = cyclic_syllable_count(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK(cyclic_syllable_count(rotate(w, k)) == count);
    }
  }
}

TEST_CASE("alternating words") {
  CHECK(to_string(artin_word('a', 'b', 1)) == "a");
  CHECK(to_string(artin_word('a', 'b', 2)) == "ab");
  CHECK(to_string(artin_word('b', 'a', 3)) == "bab");
  CHECK(to_string(artin_word('a', 'b', 5)) == "ababa");
}

TEST_CASE("the alternating relator has exactly 2m cyclic syllables") {
  for (int m = 2; m <= 8; ++m) {
    Word rel = artin_word('a', 'b', m) * invert(artin_word('b', 'a', m));
    CHECK(is_cyclically_reduced(rel));
    CHECK(cyclic_syllable_count(rel) == 2 * static_cast<std::size_t>(m));
  }
}

TEST_CASE("orders: a < A < b < B") {
  CHECK(lex_less(W("a"), W("A")));
  CHECK(lex_less(W("A"), W("b")));
  CHECK(lex_less(W("ab"), W("aB")));
  CHECK(!lex_less(W("a"), W("a")));
  CHECK(lex_less(W("a"), W("ab")));          // prefix is smaller
  CHECK(length_lex_less(W("B"), W("aa")));   // shorter first
  CHECK(length_lex_less(W("ab"), W("aB")));
}

TEST_CASE("canonical cyclic representative") {
  CHECK(canonical_cyclic(W("bab")) == W("abb"));
  CHECK(canonical_cyclic(W("abAB")) == W("abAB"));
  // Inversion is included: BA inverts to ab.
  CHECK(canonical_cyclic(W("BA")) == W("ab"));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(rng, 8);
    Word canon = canonical_cyclic(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK(canonical_cyclic(rotate(w, k)) == canon);
    }
    CHECK(canonical_cyclic(invert(w)) == canon);
  }
}

TEST_CASE("pow and rotate") {
  CHECK(to_string(pow(W("ab"), 3)) == "ababab");
  CHECK(to_string(pow(W("ab"), -2)) == "BABA");
  CHECK(pow(W("ab"), 0).empty());
  CHECK(rotate(W("abc"), 1) == W("bca"));
  CHECK(rotate(W("abc"), 3) == W("abc"));
  CHECK(rotate(W(""), 2) == W(""));
}

TEST_CASE("printing round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 15);
    CHECK(parse_word(to_string(w)) == w);
  }
}

}  // TEST_SUITE

#include "cx2/words.hpp"

#include <algorithm>
#include <cctype>

namespace cx2 {

namespace {
// Exponents are expanded into plain letter sequences, so an absurd exponent
// would silently allocate gigabytes. Refuse early instead.
constexpr long long kMaxExponent = 1'000'000;
}  // namespace

Letter Letter::from_char(char c) {
  if (c >= 'a' && c <= 'z') return {c, +1};
  if (c >= 'A' && c <= 'Z') return {static_cast<char>(c - 'A' + 'a'), -1};
  throw std::invalid_argument(std::string("not a generator letter: '") + c +
                              "'");
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c +
                           "' in word",
                       i);
    }
    Letter base = Letter::from_char(c);
    ++i;
    long long count = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t caret = i;
      ++i;
      if (i >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("'^' must be followed by a positive integer", caret);
      }
      count = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        count = count * 10 + (text[i] - '0');
        if (count > kMaxExponent) {
          throw ParseError("exponent too large", caret);
        }
        ++i;
      }
      if (count == 0) {
        throw ParseError("exponent must be positive", caret);
      }
    }
    for (long long k = 0; k < count; ++k) w.letters.push_back(base);
  }
  return w;
}

Word parse_relation(std::string_view text) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) return parse_word(text);
  if (text.find('=', eq + 1) != std::string_view::npos) {
    throw ParseError("a relation has exactly one '='",
                     text.find('=', eq + 1));
  }
  Word lhs = parse_word(text.substr(0, eq));
  Word rhs;
  try {
    rhs = parse_word(text.substr(eq + 1));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), eq + 1 + e.offset);
  }
  return lhs * invert(rhs);
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& l : w) s.push_back(l.to_char());
  return s;
}

Word invert(const Word& w) {
  Word r;
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    r.letters.push_back(it->inverse());
  }
  return r;
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word pow(const Word& w, long long e) {
  Word base = e < 0 ? invert(w) : w;
  long long n = e < 0 ? -e : e;
  Word r;
  r.letters.reserve(base.size() * static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) {
    r.letters.insert(r.letters.end(), base.letters.begin(),
                     base.letters.end());
  }
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  r.letters.reserve(w.size());
  for (const Letter& l : w) {
    if (!r.empty() && r.letters.back() == l.inverse()) {
      r.letters.pop_back();
    } else {
      r.letters.push_back(l);
    }
  }
  return r;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r.letters[lo] == r.letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.letters.begin() + lo,
                                  r.letters.begin() + hi));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w.letters[i] == w.letters[i + 1].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.letters.front() != w.letters.back().inverse();
}

std::vector<Syllable> syllables(const Word& w) {
  if (!is_freely_reduced(w)) {
    throw std::invalid_argument("syllables: word is not freely reduced");
  }
  std::vector<Syllable> out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.sign;
    } else {
      out.push_back({l.generator, l.sign});
    }
  }
  // In a freely reduced word a run of one generator has constant sign, so no
  // exponent can have cancelled to zero.
  return out;
}

std::size_t cyclic_syllable_count(const Word& w) {
  if (!is_cyclically_reduced(w)) {
    throw std::invalid_argument(
        "cyclic_syllable_count: word is not cyclically reduced");
  }
  std::vector<Syllable> s = syllables(w);
  if (s.size() >= 2 && s.front().generator == s.back().generator) {
    return s.size() - 1;  // first and last merge around the seam
  }
  return s.size();
}

Word artin_word(char x, char y, int m) {
  if (m < 1) throw std::invalid_argument("artin_word: length must be >= 1");
  if (x == y) {
    throw std::invalid_argument("artin_word: generators must differ");
  }
  Word w;
  w.letters.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    w.letters.push_back(Letter{i % 2 == 0 ? x : y, +1});
  }
  return w;
}

bool lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Letter& x, const Letter& y) { return x.rank() < y.rank(); });
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word r;
  r.letters.reserve(w.size());
  r.letters.insert(r.letters.end(), w.letters.begin() + k, w.letters.end());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + k);
  return r;
}

Word canonical_cyclic(const Word& w) {
  Word best = w;
  const Word inv = invert(w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (const Word* base : {&w, &inv}) {
      Word cand = rotate(*base, k);
      if (lex_less(cand, best)) best = cand;
    }
  }
  return best;
}

}  // namespace cx2

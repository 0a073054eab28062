#include "cx2/families.hpp"

#include <charconv>
#include <stdexcept>

namespace cx2 {

namespace {

Word letter_word(char g, int sign = +1) { return Word({Letter{g, sign}}); }

int parse_int_at(std::string_view text, std::size_t offset) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + offset,
                                   text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw ParseError("family parameter must be a nonnegative integer",
                     offset);
  }
  return value;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

std::string FamilyId::to_string() const {
  switch (kind) {
    case FamilyKind::Tor:
      return "tor:" + std::to_string(m) + "," + std::to_string(n);
    case FamilyKind::BS:
      if (m == n) return "bs:" + std::to_string(m);
      return "bsgen:" + std::to_string(m) + "," + std::to_string(n);
    case FamilyKind::Art:
      return "art:" + std::to_string(m);
  }
  return "?";
}

FamilyId parse_family(std::string_view spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family spec needs the form name:parameters",
                     spec.size());
  }
  std::string_view name = spec.substr(0, colon);
  std::string_view params = spec.substr(colon + 1);
  std::size_t comma = params.find(',');

  auto one_param = [&]() {
    if (comma != std::string_view::npos) {
      throw ParseError("this family takes a single parameter",
                       colon + 1 + comma);
    }
    return parse_int_at(params, 0);
  };
  auto two_params = [&]() {
    if (comma == std::string_view::npos) {
      throw ParseError("this family takes two parameters M,N", spec.size());
    }
    int a = parse_int_at(params.substr(0, comma), 0);
    int b = parse_int_at(params.substr(comma + 1), 0);
    return std::pair{a, b};
  };

  if (name == "tor") {
    auto [m, n] = two_params();
    return {FamilyKind::Tor, m, n};
  }
  if (name == "bs") {
    int k = one_param();
    return {FamilyKind::BS, k, k};
  }
  if (name == "bsgen") {
    auto [m, n] = two_params();
    return {FamilyKind::BS, m, n};
  }
  if (name == "art") {
    int m = one_param();
    return {FamilyKind::Art, m, 0};
  }
  throw ParseError("unknown family '" + std::string(name) +
                       "' (expected tor, bs, bsgen or art)",
                   0);
}

Presentation torus_knot_presentation(int m, int n) {
  require(m >= 1 && n >= 1, "torus_knot_presentation: need m, n >= 1");
  return Presentation{{'a', 'b'},
                      {pow(letter_word('a'), m) * pow(letter_word('b'), -n)}};
}

CombinatorialDescription torus_knot_description(int m, int n) {
  require(m >= 1 && n >= 1, "torus_knot_description: need m, n >= 1");
  Word w = pow(letter_word('a'), m) * letter_word('t') *
           pow(letter_word('b'), -n) * letter_word('t', -1);
  return CombinatorialDescription{{w}};
}

Presentation bs_presentation(int m, int n) {
  require(m >= 1 && n >= 1, "bs_presentation: need m, n >= 1");
  Word w = pow(letter_word('a'), m) * letter_word('t') *
           pow(letter_word('a'), -n) * letter_word('t', -1);
  return Presentation{{'a', 't'}, {w}};
}

Presentation artin_presentation(int m) {
  require(m >= 2, "artin_presentation: need m >= 2");
  return Presentation{
      {'a', 'b'},
      {artin_word('a', 'b', m) * invert(artin_word('b', 'a', m))}};
}

CombinatorialDescription artin_description(int m) {
  require(m >= 2, "artin_description: need m >= 2");
  Word lhs = artin_word('a', 'b', m);
  Word rhs_inv = invert(artin_word('b', 'a', m));
  Word w;
  if (m % 2 == 0) {
    w = lhs * letter_word('t') * rhs_inv * letter_word('t', -1);
  } else {
    w = lhs * letter_word('t', -1) * rhs_inv * letter_word('t', -1);
  }
  return CombinatorialDescription{{w}};
}

GroupHomomorphismSpec artin_to_tor_map(int m) {
  require(m >= 3 && m % 2 == 1, "artin_to_tor_map: need odd m >= 3");
  GroupHomomorphismSpec hom;
  hom.source_generators = {'a', 'b'};
  hom.images['a'] = pow(letter_word('b'), -(m - 1) / 2) * letter_word('a');
  hom.images['b'] = letter_word('a', -1) * pow(letter_word('b'), (m + 1) / 2);
  hom.target = {FamilyKind::Tor, 2, m};
  return hom;
}

GroupHomomorphismSpec tor_to_artin_map(int m) {
  require(m >= 3 && m % 2 == 1, "tor_to_artin_map: need odd m >= 3");
  GroupHomomorphismSpec hom;
  hom.source_generators = {'a', 'b'};
  hom.images['a'] = artin_word('a', 'b', m);
  hom.images['b'] = letter_word('a') * letter_word('b');
  hom.target = {FamilyKind::Art, m, 0};
  return hom;
}

GroupHomomorphismSpec artin_to_bs_map(int m) {
  require(m >= 2 && m % 2 == 0, "artin_to_bs_map: need even m >= 2");
  GroupHomomorphismSpec hom;
  hom.source_generators = {'a', 'b'};
  hom.images['a'] = letter_word('t');
  hom.images['b'] = letter_word('t', -1) * letter_word('a');
  hom.target = {FamilyKind::BS, m / 2, m / 2};
  return hom;
}

GroupHomomorphismSpec bs_to_artin_map(int m) {
  require(m >= 2 && m % 2 == 0, "bs_to_artin_map: need even m >= 2");
  GroupHomomorphismSpec hom;
  hom.source_generators = {'a', 't'};
  hom.images['a'] = letter_word('a') * letter_word('b');
  hom.images['t'] = letter_word('a');
  hom.target = {FamilyKind::Art, m, 0};
  return hom;
}

Word apply_homomorphism(const Word& w, const GroupHomomorphismSpec& hom) {
  Word out;
  for (const Letter& l : w) {
    auto it = hom.images.find(l.generator);
    if (it == hom.images.end()) {
      throw std::invalid_argument(
          std::string("apply_homomorphism: no image for generator '") +
          l.generator + "'");
    }
    Word piece = l.sign > 0 ? it->second : invert(it->second);
    out.letters.insert(out.letters.end(), piece.letters.begin(),
                       piece.letters.end());
  }
  return free_reduce(out);
}

}  // namespace cx2

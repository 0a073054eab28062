#ifndef CX2_FAMILIES_HPP_
#define CX2_FAMILIES_HPP_

#include <map>
#include <string>
#include <string_view>

#include "cx2/complex.hpp"

namespace cx2 {

enum class FamilyKind { Tor, BS, Art };

/// One group out of the three supported families:
///   Tor(m, n)  <a, b | a^m = b^n>          (torus-knot style)
///   BS(m, n)   <a, t | a^m t = t a^n>      (solvers need m == n)
///   Art(m)     <a, b | aba... = bab...>    (m letters each side)
struct FamilyId {
  FamilyKind kind;
  int m = 0;
  int n = 0;  // unused for Art

  std::string to_string() const;
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Accepts "tor:M,N", "bs:K" (meaning BS(K,K)), "bsgen:M,N", "art:M".
/// Throws ParseError on anything else.
FamilyId parse_family(std::string_view spec);

/// <a, b | a^m b^-n>, m, n >= 1.
Presentation torus_knot_presentation(int m, int n);

/// [a^m t b^-n t^-1]: one polygon whose complex has two vertices, the
/// powers of a running around one and the powers of b around the other.
CombinatorialDescription torus_knot_description(int m, int n);

/// <a, t | a^m t a^-n t^-1>, m, n >= 1.
Presentation bs_presentation(int m, int n);

/// <a, b | (a,b)_m ((b,a)_m)^-1>, m >= 2, where (x,y)_m = xyxy... (m
/// letters).
Presentation artin_presentation(int m);

/// One-polygon description whose complex has two vertices:
///   even m: [(a,b)_m t ((b,a)_m)^-1 t^-1]
///   odd  m: [(a,b)_m t^-1 ((b,a)_m)^-1 t^-1]
CombinatorialDescription artin_description(int m);

/// A homomorphism out of a two-generator group, given by generator images.
/// `verified` starts false; only the word-problem layer flips it, after
/// checking that the defining relator maps to the identity and that the
/// companion map inverts it on generators.
struct GroupHomomorphismSpec {
  std::vector<char> source_generators;
  std::map<char, Word> images;
  FamilyId target;
  bool verified = false;
};

/// Art(m) -> Tor(2, m) for odd m >= 3:
///   a -> b^-(m-1)/2 a,   b -> a^-1 b^(m+1)/2.
GroupHomomorphismSpec artin_to_tor_map(int m);

/// Inverse direction, Tor(2, m) -> Art(m) for odd m >= 3:
///   a -> (a,b)_m,   b -> ab.
GroupHomomorphismSpec tor_to_artin_map(int m);

/// Art(m) -> BS(m/2, m/2) for even m >= 2:  a -> t,  b -> t^-1 a.
GroupHomomorphismSpec artin_to_bs_map(int m);

/// Inverse direction, BS(m/2, m/2) -> Art(m) for even m:  a -> ab,  t -> a.
GroupHomomorphismSpec bs_to_artin_map(int m);

/// Letter-by-letter substitution; the result is freely reduced.
Word apply_homomorphism(const Word& w, const GroupHomomorphismSpec& hom);

}  // namespace cx2

#endif  // CX2_FAMILIES_HPP_

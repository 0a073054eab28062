#ifndef CX2_WORDPROBLEM_HPP_
#define CX2_WORDPROBLEM_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cx2/families.hpp"
#include "cx2/words.hpp"

namespace cx2 {

/// Normal form in Tor(m, n) relative to the central element z = a^m = b^n:
/// an integer power of z followed by an alternating product of coset
/// representatives a^r (0 < r < m) and b^s (0 < s < n). Every group element
/// has exactly one such form, so a word is the identity exactly when its
/// form is z^0 with no cosets.
struct TorNormalForm {
  long long central_power = 0;
  std::vector<Syllable> cosets;

  bool is_identity() const { return central_power == 0 && cosets.empty(); }
  friend bool operator==(const TorNormalForm&, const TorNormalForm&) = default;
};

/// Folds a word over {a, b} into its normal form. Requires m, n >= 1.
TorNormalForm tor_normal_form(const Word& w, int m, int n);

/// A word spelling the normal form, z expanded as a^m. Folding it back
/// reproduces nf; used to state multiplicativity: nf(uv) = nf(exp(nf(u))
/// exp(nf(v))).
Word expand(const TorNormalForm& nf, int m, int n);

std::string to_string(const TorNormalForm& nf);

/// One step of a reduction trace. `rule` indexes the rewrite system's swap
/// rules; -1 means free reduction, -2 a Britton pinch (drop a t...t^-1 pair
/// around a power of a^k).
struct TraceStep {
  int rule = -1;
  int position = 0;
  Word result;
};

/// Outcome of a word-problem query, with enough evidence to re-check it:
/// either a reduction trace ending at the empty word, or a nontriviality
/// certificate (a normal form, a Britton-reduced word, or a homomorphic
/// image plus the target's certificate).
struct Verdict {
  bool is_identity = false;
  std::string method;  // "normal-form" or "rewrite"
  std::string certificate;
  std::vector<TraceStep> trace;
  std::optional<Word> image;  // set when decided through a homomorphism
};

/// Decides w in Tor(m, n) by the central normal form. m, n >= 1.
Verdict tor_is_identity(const Word& w, int m, int n);

/// Decides w in BS(k, k) = <a, t | a^k t = t a^k> by Britton reduction:
/// repeatedly delete t^-1 a^e t or t a^e t^-1 with k | e. A freely reduced
/// word with no such pinch and some t left is never the identity; a t-free
/// word is the identity exactly when its exponent sum vanishes.
Verdict bs_is_identity(const Word& w, int k);

/// Decides w in Art(m) by translating through the verified isomorphism:
/// odd m to Tor(2, m), even m to BS(m/2, m/2).
Verdict artin_is_identity(const Word& w, int m);

/// Normal-form-style decision for any family. BS is only supported with
/// m == n.
Verdict family_is_identity(const Word& w, const FamilyId& family);

/// Weighted subword-swap system of a family.
///   Tor(m, n): a^m <-> b^n and inverses; a weighs n, b weighs m.
///   Art(m):    (a,b)_m <-> (b,a)_m and inverses; unit weights.
/// Swaps preserve the weighted length, free reduction lowers it.
struct RewriteSystem {
  FamilyId family;
  std::vector<std::pair<Word, Word>> rules;

  long long letter_weight(char generator) const;
  long long weighted_length(const Word& w) const;
};

/// Throws for BS: there is no two-sided swap system here.
RewriteSystem rewrite_system(const FamilyId& family);

/// If rules[rule].first occurs at `position`, the word with that occurrence
/// replaced by rules[rule].second; otherwise nothing.
std::optional<Word> apply_swap(const Word& w, const RewriteSystem& sys,
                               int rule, std::size_t position);

/// Breadth-first search over words reachable by swaps and free reductions,
/// all of weighted length <= that of w. Finding the empty word proves
/// identity, with the search path as trace; exhausting the space proves
/// nontriviality. Family must be Tor or Art.
Verdict rewrite_is_identity(const Word& w, const FamilyId& family);

/// Limits for the exhaustive scans. A max_len above budget_cap is refused
/// (std::invalid_argument) with an estimate of the words it would visit.
/// jobs > 1 splits the word stream by first letter across threads; reports
/// do not depend on the split.
struct ScanOptions {
  int max_len = 8;
  int budget_cap = 16;
  int jobs = 1;
};

/// All identity words among freely reduced words of length <= max_len, in
/// length-lexicographic order, decided by the family's normal-form solver.
std::vector<Word> enumerate_identity_words(const FamilyId& family,
                                           int max_len, int budget_cap = 16);

/// Scans Tor(m, n): every nontrivial identity word must contain a run
/// a^{+-m} or b^{+-n} (weak form), in fact a full syllable whose exponent
/// is a nonzero multiple of m resp. n (divisibility form).
struct SubwordReport {
  FamilyId family;
  int max_len = 0;
  long long words_scanned = 0;
  long long identity_words = 0;
  long long weak_failures = 0;
  long long divisibility_failures = 0;
  std::vector<Word> counterexamples;
};
SubwordReport check_subword_property(int m, int n, const ScanOptions& opts);

/// Scans Art(m): every nontrivial cyclically reduced identity word has at
/// least 2m syllables counted cyclically. One representative per rotation
/// class is tested (identity and the cyclic count are rotation-invariant);
/// the linear count of each representative is tracked as well.
struct SyllableReport {
  int m = 0;
  int max_len = 0;
  long long words_scanned = 0;
  long long identity_words = 0;
  long long min_cyclic_syllables = -1;  // -1: no identity word found
  long long min_linear_syllables = -1;
  std::vector<Word> counterexamples;  // identity words below the 2m bound
};
SyllableReport check_syllable_bound(int m, const ScanOptions& opts);

/// Center check. For Tor(m, n), m, n >= 2, the designated generator is
/// z = a^m; for Art(m), m >= 3, it is z = (a,b)_m when m is even and z^2
/// when odd. Every word of length <= max_len that commutes with both
/// generators must equal a power (|exponent| <= max_len) of the designated
/// generator. Art(2) is abelian, so the scan only asserts that everything
/// commutes.
struct CenterReport {
  FamilyId family;
  int max_len = 0;
  Word central_generator;
  bool abelian_special_case = false;
  bool generator_is_central = false;
  /// Odd Art(m) only: z itself (half of the designated generator) must not
  /// be central.
  bool half_power_noncentral = false;
  long long words_scanned = 0;
  long long central_count = 0;
  std::vector<Word> violations;
};
CenterReport check_center(const FamilyId& family, const ScanOptions& opts);

/// Runs the normal-form solver and the rewrite search over every freely
/// reduced word of length <= max_len and records disagreements (expected:
/// none). Family must be Tor or Art.
struct AgreementReport {
  FamilyId family;
  int max_len = 0;
  long long words_scanned = 0;
  long long identity_words = 0;
  std::vector<Word> disagreements;
};
AgreementReport check_solver_agreement(const FamilyId& family,
                                       const ScanOptions& opts);

/// Certifies the Art(m) isomorphism onto Tor(2, m) (odd m) or BS(m/2, m/2)
/// (even m): the defining relators map to the identity both ways, and both
/// round trips fix the generators. Every check is decided by a solver that
/// does not presuppose the map under test.
struct IsoReport {
  int m = 0;
  FamilyId target;
  std::vector<std::pair<std::string, bool>> checks;
  bool verified = false;
};
IsoReport verify_artin_isomorphism(int m);

/// The forward map with its verified flag set, memoized per m. Throws
/// std::logic_error if verification ever fails.
GroupHomomorphismSpec verified_artin_map(int m);

}  // namespace cx2

#endif  // CX2_WORDPROBLEM_HPP_

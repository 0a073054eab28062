#include "cx2/wordproblem.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace cx2 {

namespace {

constexpr long long kMaxSearchStates = 5'000'000;
constexpr std::size_t kMaxListedWords = 20;

void require_letters(const Word& w, std::string_view allowed,
                     const char* who) {
  for (const Letter& l : w) {
    if (allowed.find(l.generator) == std::string_view::npos) {
      throw std::invalid_argument(std::string(who) + ": letter '" +
                                  l.generator + "' is not a generator here");
    }
  }
}

Word letter_word(char g, int sign = +1) { return Word({Letter{g, sign}}); }

}  // namespace

TorNormalForm tor_normal_form(const Word& w, int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("tor_normal_form: need m, n >= 1");
  }
  require_letters(w, "ab", "tor_normal_form");

  std::vector<Syllable> syls;
  auto fold_in = [](std::vector<Syllable>& list, char g, long long e) {
    if (e == 0) return;
    if (!list.empty() && list.back().generator == g) {
      list.back().exponent += e;
      if (list.back().exponent == 0) list.pop_back();
    } else {
      list.push_back({g, e});
    }
  };
  for (const Letter& l : w) fold_in(syls, l.generator, l.sign);

  // Push every exponent into [0, M) for its generator, feeding the quotient
  // into the central power; a residue of zero deletes the syllable and lets
  // its neighbours merge, which may expose new extractions.
  long long p = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < syls.size(); ++i) {
      long long M = syls[i].generator == 'a' ? m : n;
      long long e = syls[i].exponent;
      if (e >= 1 && e < M) continue;
      long long q = e >= 0 ? e / M : -((-e + M - 1) / M);
      long long r = e - q * M;
      p += q;
      std::vector<Syllable> next;
      for (std::size_t k = 0; k < syls.size(); ++k) {
        if (k == i) {
          fold_in(next, syls[k].generator, r);
        } else {
          fold_in(next, syls[k].generator, syls[k].exponent);
        }
      }
      syls = std::move(next);
      changed = true;
      break;
    }
  }
  return TorNormalForm{p, std::move(syls)};
}

Word expand(const TorNormalForm& nf, int m, int n) {
  (void)n;
  Word out = pow(letter_word('a'), m * nf.central_power);
  for (const Syllable& s : nf.cosets) {
    out = out * pow(letter_word(s.generator), s.exponent);
  }
  return out;
}

std::string to_string(const TorNormalForm& nf) {
  std::string s = "z^" + std::to_string(nf.central_power);
  for (const Syllable& c : nf.cosets) {
    s += ' ';
    s += c.generator;
    s += '^';
    s += std::to_string(c.exponent);
  }
  return s;
}

Verdict tor_is_identity(const Word& w, int m, int n) {
  TorNormalForm nf = tor_normal_form(w, m, n);
  Verdict v;
  v.is_identity = nf.is_identity();
  v.method = "normal-form";
  v.certificate = "normal form " + to_string(nf);
  return v;
}

namespace {

// Core of the BS(k, k) decision. Returns the Britton-reduced residue and
// optionally logs each pinch.
Word britton_core(const Word& w, int k, std::vector<TraceStep>* trace) {
  Word cur = free_reduce(w);
  for (;;) {
    std::vector<std::size_t> tpos;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur.letters[i].generator == 't') tpos.push_back(i);
    }
    bool pinched = false;
    for (std::size_t idx = 0; idx + 1 < tpos.size(); ++idx) {
      std::size_t i = tpos[idx], j = tpos[idx + 1];
      if (cur.letters[i].sign == cur.letters[j].sign) continue;
      long long e = 0;
      for (std::size_t q = i + 1; q < j; ++q) e += cur.letters[q].sign;
      if (e % k != 0) continue;
      // a^(qk) commutes with t, so the two stable letters cancel.
      Word next;
      for (std::size_t q = 0; q < cur.size(); ++q) {
        if (q == i || q == j) continue;
        next.letters.push_back(cur.letters[q]);
      }
      next = free_reduce(next);
      if (trace) trace->push_back({-2, static_cast<int>(i), next});
      cur = std::move(next);
      pinched = true;
      break;
    }
    if (!pinched) return cur;
  }
}

}  // namespace

Verdict bs_is_identity(const Word& w, int k) {
  if (k < 1) throw std::invalid_argument("bs_is_identity: need k >= 1");
  require_letters(w, "at", "bs_is_identity");
  Verdict v;
  v.method = "normal-form";
  Word reduced = britton_core(w, k, &v.trace);
  v.is_identity = reduced.empty();
  v.certificate = v.is_identity
                      ? "pinches to the empty word"
                      : "Britton-reduced residue \"" + to_string(reduced) +
                            "\"";
  return v;
}

namespace {

bool bs_quick(const Word& w, int k) {
  return britton_core(w, k, nullptr).empty();
}

bool target_quick(const Word& w, const FamilyId& target) {
  if (target.kind == FamilyKind::Tor) {
    return tor_normal_form(w, target.m, target.n).is_identity();
  }
  return bs_quick(w, target.m);
}

// Decide an Artin word through a forward map, without consulting the
// verified-map cache (the verifier itself needs this).
bool artin_quick_via(const Word& w, const GroupHomomorphismSpec& fwd) {
  return target_quick(apply_homomorphism(w, fwd), fwd.target);
}

Word artin_relator(int m) {
  return artin_word('a', 'b', m) * invert(artin_word('b', 'a', m));
}

Word target_relator(const FamilyId& target) {
  if (target.kind == FamilyKind::Tor) {
    return pow(letter_word('a'), target.m) * pow(letter_word('b'), -target.n);
  }
  return pow(letter_word('a'), target.m) * letter_word('t') *
         pow(letter_word('a'), -target.m) * letter_word('t', -1);
}

}  // namespace

IsoReport verify_artin_isomorphism(int m) {
  if (m < 2) {
    throw std::invalid_argument("verify_artin_isomorphism: need m >= 2");
  }
  bool odd = m % 2 == 1;
  GroupHomomorphismSpec fwd = odd ? artin_to_tor_map(m) : artin_to_bs_map(m);
  GroupHomomorphismSpec rev = odd ? tor_to_artin_map(m) : bs_to_artin_map(m);

  IsoReport rep;
  rep.m = m;
  rep.target = fwd.target;
  auto add = [&](std::string name, bool ok) {
    rep.checks.emplace_back(std::move(name), ok);
  };

  add("defining relator maps to the identity",
      target_quick(apply_homomorphism(artin_relator(m), fwd), fwd.target));
  add("target relator pulls back to the identity",
      artin_quick_via(apply_homomorphism(target_relator(fwd.target), rev),
                      fwd));
  for (char g : fwd.source_generators) {
    Word round = apply_homomorphism(apply_homomorphism(letter_word(g), fwd),
                                    rev) *
                 letter_word(g, -1);
    add(std::string("round trip fixes source generator '") + g + "'",
        artin_quick_via(round, fwd));
  }
  for (const auto& [g, unused] : rev.images) {
    (void)unused;
    Word round = apply_homomorphism(apply_homomorphism(letter_word(g), rev),
                                    fwd) *
                 letter_word(g, -1);
    add(std::string("round trip fixes target generator '") + g + "'",
        target_quick(round, fwd.target));
  }
  rep.verified = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const auto& c) { return c.second; });
  return rep;
}

GroupHomomorphismSpec verified_artin_map(int m) {
  static std::mutex mu;
  static std::map<int, GroupHomomorphismSpec> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  IsoReport rep = verify_artin_isomorphism(m);
  if (!rep.verified) {
    throw std::logic_error("verified_artin_map: verification failed for m=" +
                           std::to_string(m));
  }
  GroupHomomorphismSpec fwd =
      m % 2 == 1 ? artin_to_tor_map(m) : artin_to_bs_map(m);
  fwd.verified = true;
  cache[m] = fwd;
  return fwd;
}

Verdict artin_is_identity(const Word& w, int m) {
  if (m < 2) throw std::invalid_argument("artin_is_identity: need m >= 2");
  require_letters(w, "ab", "artin_is_identity");
  GroupHomomorphismSpec fwd = verified_artin_map(m);
  Word img = apply_homomorphism(w, fwd);
  Verdict inner = fwd.target.kind == FamilyKind::Tor
                      ? tor_is_identity(img, fwd.target.m, fwd.target.n)
                      : bs_is_identity(img, fwd.target.m);
  Verdict v;
  v.is_identity = inner.is_identity;
  v.method = "normal-form";
  v.image = img;
  v.certificate = "image \"" + to_string(img) + "\" in " +
                  fwd.target.to_string() + "; " + inner.certificate;
  v.trace = std::move(inner.trace);
  return v;
}

Verdict family_is_identity(const Word& w, const FamilyId& family) {
  switch (family.kind) {
    case FamilyKind::Tor:
      return tor_is_identity(w, family.m, family.n);
    case FamilyKind::BS:
      if (family.m != family.n) {
        throw std::invalid_argument(
            "family_is_identity: only BS(k, k) is supported");
      }
      return bs_is_identity(w, family.m);
    case FamilyKind::Art:
      return artin_is_identity(w, family.m);
  }
  throw std::logic_error("family_is_identity: bad family kind");
}

long long RewriteSystem::letter_weight(char generator) const {
  if (family.kind == FamilyKind::Tor) {
    if (generator == 'a') return family.n;
    if (generator == 'b') return family.m;
    throw std::invalid_argument("letter_weight: unknown generator");
  }
  if (generator != 'a' && generator != 'b') {
    throw std::invalid_argument("letter_weight: unknown generator");
  }
  return 1;
}

long long RewriteSystem::weighted_length(const Word& w) const {
  long long total = 0;
  for (const Letter& l : w) total += letter_weight(l.generator);
  return total;
}

RewriteSystem rewrite_system(const FamilyId& family) {
  RewriteSystem sys;
  sys.family = family;
  Word lhs, rhs;
  if (family.kind == FamilyKind::Tor) {
    if (family.m < 1 || family.n < 1) {
      throw std::invalid_argument("rewrite_system: need m, n >= 1");
    }
    lhs = pow(letter_word('a'), family.m);
    rhs = pow(letter_word('b'), family.n);
  } else if (family.kind == FamilyKind::Art) {
    if (family.m < 2) throw std::invalid_argument("rewrite_system: m >= 2");
    lhs = artin_word('a', 'b', family.m);
    rhs = artin_word('b', 'a', family.m);
  } else {
    throw std::invalid_argument(
        "rewrite_system: no subword-swap system for BS");
  }
  sys.rules.push_back({lhs, rhs});
  sys.rules.push_back({rhs, lhs});
  sys.rules.push_back({invert(lhs), invert(rhs)});
  sys.rules.push_back({invert(rhs), invert(lhs)});
  return sys;
}

std::optional<Word> apply_swap(const Word& w, const RewriteSystem& sys,
                               int rule, std::size_t position) {
  if (rule < 0 || rule >= static_cast<int>(sys.rules.size())) {
    throw std::invalid_argument("apply_swap: no such rule");
  }
  const Word& lhs = sys.rules[rule].first;
  const Word& rhs = sys.rules[rule].second;
  if (position + lhs.size() > w.size()) return std::nullopt;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (w.letters[position + i] != lhs.letters[i]) return std::nullopt;
  }
  Word out;
  out.letters.reserve(w.size() - lhs.size() + rhs.size());
  out.letters.insert(out.letters.end(), w.letters.begin(),
                     w.letters.begin() + position);
  out.letters.insert(out.letters.end(), rhs.letters.begin(),
                     rhs.letters.end());
  out.letters.insert(out.letters.end(),
                     w.letters.begin() + position + lhs.size(),
                     w.letters.end());
  return out;
}

namespace {

Word decode(const std::string& s) {
  Word w;
  w.letters.reserve(s.size());
  for (char c : s) w.letters.push_back(Letter::from_char(c));
  return w;
}

// Search core shared by the traced and the cached variant. Successors of a
// state: every swap (rules in order, positions left to right), then one
// free-reduction move when the word is not reduced.
template <typename OnEdge>
bool bfs_reaches_empty(const std::string& start, const RewriteSystem& sys,
                       std::unordered_set<std::string>& visited,
                       const std::unordered_map<std::string, bool>* cache,
                       std::optional<bool>& cache_verdict, OnEdge on_edge) {
  if (start.empty()) return true;
  std::deque<std::string> queue{start};
  visited.insert(start);
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    Word cw = decode(cur);
    auto offer = [&](const Word& next, int rule, int pos) -> int {
      std::string s = to_string(next);
      if (s.empty()) {
        on_edge(cur, rule, pos, s);
        return 1;  // reached the identity
      }
      if (!visited.insert(s).second) return 0;
      if (visited.size() > kMaxSearchStates) {
        throw std::runtime_error(
            "rewrite search exceeded its state budget (" +
            std::to_string(kMaxSearchStates) + " words)");
      }
      if (cache) {
        auto it = cache->find(s);
        if (it != cache->end()) {
          cache_verdict = it->second;
          return 2;  // resolved by an earlier search
        }
      }
      on_edge(cur, rule, pos, s);
      queue.push_back(s);
      return 0;
    };
    for (int r = 0; r < static_cast<int>(sys.rules.size()); ++r) {
      for (std::size_t p = 0; p + sys.rules[r].first.size() <= cw.size();
           ++p) {
        if (std::optional<Word> next = apply_swap(cw, sys, r, p)) {
          int outcome = offer(*next, r, static_cast<int>(p));
          if (outcome == 1) return true;
          if (outcome == 2) return false;
        }
      }
    }
    if (!is_freely_reduced(cw)) {
      int outcome = offer(free_reduce(cw), -1, 0);
      if (outcome == 1) return true;
      if (outcome == 2) return false;
    }
  }
  return false;
}

bool rewrite_identity_cached(const Word& w, const RewriteSystem& sys,
                             std::unordered_map<std::string, bool>& cache) {
  std::string start = to_string(w);
  if (start.empty()) return true;
  if (auto it = cache.find(start); it != cache.end()) return it->second;
  std::unordered_set<std::string> visited;
  std::optional<bool> from_cache;
  bool found = bfs_reaches_empty(start, sys, visited, &cache, from_cache,
                                 [](const std::string&, int, int,
                                    const std::string&) {});
  bool verdict = from_cache.value_or(found);
  // Everything visited was reached by moves that preserve the group
  // element, so the verdict transfers to the whole set.
  for (const std::string& s : visited) cache.emplace(s, verdict);
  return verdict;
}

}  // namespace

Verdict rewrite_is_identity(const Word& w, const FamilyId& family) {
  RewriteSystem sys = rewrite_system(family);
  long long start_weight = sys.weighted_length(w);  // also validates letters

  std::unordered_set<std::string> visited;
  std::unordered_map<std::string, std::tuple<std::string, int, int>> parent;
  std::optional<bool> unused;
  bool found = bfs_reaches_empty(
      to_string(w), sys, visited, nullptr, unused,
      [&](const std::string& from, int rule, int pos, const std::string& to) {
        parent.emplace(to, std::tuple{from, rule, pos});
      });

  Verdict v;
  v.method = "rewrite";
  v.is_identity = found;
  if (found) {
    std::vector<TraceStep> steps;
    std::string cur;  // the empty word
    while (cur != to_string(w)) {
      auto [prev, rule, pos] = parent.at(cur);
      steps.push_back({rule, pos, decode(cur)});
      cur = prev;
    }
    std::reverse(steps.begin(), steps.end());
    v.trace = std::move(steps);
    v.certificate = "reduced to the empty word in " +
                    std::to_string(v.trace.size()) + " moves (weight " +
                    std::to_string(start_weight) + " at the start)";
  } else {
    v.certificate = "explored " + std::to_string(visited.size()) +
                    " words of weight <= " + std::to_string(start_weight) +
                    " without reaching the empty word";
  }
  return v;
}

namespace {

std::vector<Letter> alphabet_letters(const std::vector<char>& gens) {
  std::vector<Letter> out;
  for (char g : gens) {
    out.push_back({g, +1});
    out.push_back({g, -1});
  }
  return out;
}

template <typename Fn>
void dfs_words(Word& cur, int remaining, const std::vector<Letter>& letters,
               Fn& fn) {
  if (remaining == 0) {
    fn(static_cast<const Word&>(cur));
    return;
  }
  for (const Letter& l : letters) {
    if (!cur.empty() && l == cur.letters.back().inverse()) continue;
    cur.letters.push_back(l);
    dfs_words(cur, remaining - 1, letters, fn);
    cur.letters.pop_back();
  }
}

// Freely reduced words of length 1..max_len starting with `first` (all
// words when unset), shortest first, lexicographic within a length.
template <typename Fn>
void for_each_reduced_word(const std::vector<char>& gens, int max_len,
                           std::optional<Letter> first, Fn fn) {
  std::vector<Letter> letters = alphabet_letters(gens);
  Word cur;
  for (int len = 1; len <= max_len; ++len) {
    cur.letters.clear();
    if (first) {
      cur.letters.push_back(*first);
      if (len >= 1) dfs_words(cur, len - 1, letters, fn);
    } else {
      dfs_words(cur, len, letters, fn);
    }
  }
}

double reduced_word_estimate(int num_gens, int max_len) {
  double letters = 2.0 * num_gens;
  double total = 1;
  double layer = letters;
  for (int l = 1; l <= max_len; ++l) {
    total += layer;
    layer *= letters - 1;
  }
  return total;
}

void enforce_budget(int max_len, int budget_cap, int num_gens) {
  if (max_len < 0) throw std::invalid_argument("negative max length");
  if (max_len <= budget_cap) return;
  char est[32];
  std::snprintf(est, sizeof(est), "%.2g",
                reduced_word_estimate(num_gens, max_len));
  throw std::invalid_argument(
      "max length " + std::to_string(max_len) + " exceeds the budget cap " +
      std::to_string(budget_cap) + "; the scan would visit about " + est +
      " freely reduced words. Raise the cap explicitly to run this.");
}

// Runs one shard per first letter, concurrently when jobs > 1. Results come
// back in shard order, so merged reports never depend on scheduling.
template <typename Partial, typename ShardFn>
std::vector<Partial> run_sharded(const std::vector<Letter>& firsts, int jobs,
                                 ShardFn fn) {
  std::vector<Partial> parts;
  parts.reserve(firsts.size());
  if (jobs <= 1) {
    for (const Letter& f : firsts) parts.push_back(fn(f));
    return parts;
  }
  std::vector<std::future<Partial>> futures;
  futures.reserve(firsts.size());
  for (const Letter& f : firsts) {
    futures.push_back(std::async(std::launch::async, fn, f));
  }
  for (auto& fut : futures) parts.push_back(fut.get());
  return parts;
}

void keep_sorted_prefix(std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), length_lex_less);
  if (words.size() > kMaxListedWords) words.resize(kMaxListedWords);
}

}  // namespace

std::vector<Word> enumerate_identity_words(const FamilyId& family,
                                           int max_len, int budget_cap) {
  std::vector<char> gens =
      family.kind == FamilyKind::BS ? std::vector<char>{'a', 't'}
                                    : std::vector<char>{'a', 'b'};
  enforce_budget(max_len, budget_cap, static_cast<int>(gens.size()));
  // Validates the family parameters up front.
  family_is_identity(Word{}, family);

  std::function<bool(const Word&)> is_ident;
  switch (family.kind) {
    case FamilyKind::Tor:
      is_ident = [&](const Word& w) {
        return tor_normal_form(w, family.m, family.n).is_identity();
      };
      break;
    case FamilyKind::BS:
      is_ident = [&](const Word& w) { return bs_quick(w, family.m); };
      break;
    case FamilyKind::Art:
      is_ident = [fwd = verified_artin_map(family.m)](const Word& w) {
        return artin_quick_via(w, fwd);
      };
      break;
  }

  std::vector<Word> out{Word{}};  // the empty word is always an identity
  for_each_reduced_word(gens, max_len, std::nullopt, [&](const Word& w) {
    if (is_ident(w)) out.push_back(w);
  });
  return out;
}

SubwordReport check_subword_property(int m, int n, const ScanOptions& opts) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("check_subword_property: need m, n >= 1");
  }
  enforce_budget(opts.max_len, opts.budget_cap, 2);

  struct Partial {
    long long scanned = 0, ident = 0, weak = 0, divi = 0;
    std::vector<Word> cex;
  };
  std::vector<Letter> firsts = alphabet_letters({'a', 'b'});
  auto shard = [&](Letter first) {
    Partial part;
    for_each_reduced_word({'a', 'b'}, opts.max_len, first, [&](const Word& w) {
      ++part.scanned;
      if (!tor_normal_form(w, m, n).is_identity()) return;
      ++part.ident;
      bool weak = false, divisible = false;
      for (const Syllable& s : syllables(w)) {
        long long M = s.generator == 'a' ? m : n;
        long long mag = s.exponent < 0 ? -s.exponent : s.exponent;
        if (mag >= M) weak = true;
        if (s.exponent % M == 0) divisible = true;
      }
      if (!weak) ++part.weak;
      if (!divisible) ++part.divi;
      if ((!weak || !divisible) && part.cex.size() < kMaxListedWords) {
        part.cex.push_back(w);
      }
    });
    return part;
  };
  std::vector<Partial> parts = run_sharded<Partial>(firsts, opts.jobs, shard);

  SubwordReport rep;
  rep.family = {FamilyKind::Tor, m, n};
  rep.max_len = opts.max_len;
  rep.words_scanned = 1;  // the empty word, trivially fine
  for (Partial& part : parts) {
    rep.words_scanned += part.scanned;
    rep.identity_words += part.ident;
    rep.weak_failures += part.weak;
    rep.divisibility_failures += part.divi;
    rep.counterexamples.insert(rep.counterexamples.end(), part.cex.begin(),
                               part.cex.end());
  }
  keep_sorted_prefix(rep.counterexamples);
  return rep;
}

SyllableReport check_syllable_bound(int m, const ScanOptions& opts) {
  if (m < 2) throw std::invalid_argument("check_syllable_bound: need m >= 2");
  enforce_budget(opts.max_len, opts.budget_cap, 2);
  GroupHomomorphismSpec fwd = verified_artin_map(m);

  auto canonical_rotation = [](const Word& w) {
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (lex_less(rotate(w, k), w)) return false;
    }
    return true;
  };

  struct Partial {
    long long scanned = 0, ident = 0;
    long long min_cyc = -1, min_lin = -1;
    std::vector<Word> cex;
  };
  std::vector<Letter> firsts = alphabet_letters({'a', 'b'});
  auto shard = [&](Letter first) {
    Partial part;
    for_each_reduced_word({'a', 'b'}, opts.max_len, first, [&](const Word& w) {
      if (!is_cyclically_reduced(w) || !canonical_rotation(w)) return;
      ++part.scanned;
      if (!artin_quick_via(w, fwd)) return;
      ++part.ident;
      long long cyc = static_cast<long long>(cyclic_syllable_count(w));
      long long lin = static_cast<long long>(syllables(w).size());
      if (part.min_cyc == -1 || cyc < part.min_cyc) part.min_cyc = cyc;
      if (part.min_lin == -1 || lin < part.min_lin) part.min_lin = lin;
      if (cyc < 2LL * m && part.cex.size() < kMaxListedWords) {
        part.cex.push_back(w);
      }
    });
    return part;
  };
  std::vector<Partial> parts = run_sharded<Partial>(firsts, opts.jobs, shard);

  SyllableReport rep;
  rep.m = m;
  rep.max_len = opts.max_len;
  for (Partial& part : parts) {
    rep.words_scanned += part.scanned;
    rep.identity_words += part.ident;
    for (auto [mine, theirs] :
         {std::pair{&rep.min_cyclic_syllables, part.min_cyc},
          std::pair{&rep.min_linear_syllables, part.min_lin}}) {
      if (theirs != -1 && (*mine == -1 || theirs < *mine)) *mine = theirs;
    }
    rep.counterexamples.insert(rep.counterexamples.end(), part.cex.begin(),
                               part.cex.end());
  }
  keep_sorted_prefix(rep.counterexamples);
  return rep;
}

CenterReport check_center(const FamilyId& family, const ScanOptions& opts) {
  enforce_budget(opts.max_len, opts.budget_cap, 2);

  CenterReport rep;
  rep.family = family;
  rep.max_len = opts.max_len;

  std::function<bool(const Word&)> is_ident;
  if (family.kind == FamilyKind::Tor) {
    if (family.m < 2 || family.n < 2) {
      throw std::invalid_argument(
          "check_center: Tor needs m, n >= 2 (otherwise the group is "
          "cyclic)");
    }
    rep.central_generator = pow(letter_word('a'), family.m);
    is_ident = [&](const Word& w) {
      return tor_normal_form(w, family.m, family.n).is_identity();
    };
  } else if (family.kind == FamilyKind::Art) {
    if (family.m < 2) throw std::invalid_argument("check_center: m >= 2");
    GroupHomomorphismSpec fwd = verified_artin_map(family.m);
    Word z = artin_word('a', 'b', family.m);
    rep.abelian_special_case = family.m == 2;
    rep.central_generator = family.m % 2 == 1 ? z * z : z;
    is_ident = [fwd](const Word& w) { return artin_quick_via(w, fwd); };
    if (family.m % 2 == 1) {
      // z itself must fail to be central: only its square is.
      bool z_central = true;
      for (char g : {'a', 'b'}) {
        Word comm = z * letter_word(g) * invert(z) * letter_word(g, -1);
        if (!is_ident(comm)) z_central = false;
      }
      rep.half_power_noncentral = !z_central;
    }
  } else {
    throw std::invalid_argument("check_center: supported for Tor and Art");
  }

  rep.generator_is_central = true;
  for (char g : {'a', 'b'}) {
    Word comm = rep.central_generator * letter_word(g) *
                invert(rep.central_generator) * letter_word(g, -1);
    if (!is_ident(comm)) rep.generator_is_central = false;
  }

  struct Partial {
    long long scanned = 0, central = 0;
    std::vector<Word> violations;
  };
  std::vector<Letter> firsts = alphabet_letters({'a', 'b'});
  auto shard = [&](Letter first) {
    Partial part;
    for_each_reduced_word({'a', 'b'}, opts.max_len, first, [&](const Word& w) {
      ++part.scanned;
      bool central = true;
      for (char g : {'a', 'b'}) {
        Word comm = w * letter_word(g) * invert(w) * letter_word(g, -1);
        if (!is_ident(comm)) {
          central = false;
          break;
        }
      }
      if (rep.abelian_special_case) {
        // Abelian group: everything must commute; there is no power to
        // match.
        if (central) {
          ++part.central;
        } else if (part.violations.size() < kMaxListedWords) {
          part.violations.push_back(w);
        }
        return;
      }
      if (!central) return;
      ++part.central;
      bool matched = false;
      for (long long p = 0; p <= opts.max_len && !matched; ++p) {
        for (long long sign : {1LL, -1LL}) {
          Word candidate = w * pow(rep.central_generator, -sign * p);
          if (is_ident(candidate)) {
            matched = true;
            break;
          }
          if (p == 0) break;
        }
      }
      if (!matched && part.violations.size() < kMaxListedWords) {
        part.violations.push_back(w);
      }
    });
    return part;
  };
  std::vector<Partial> parts = run_sharded<Partial>(firsts, opts.jobs, shard);

  rep.words_scanned = 1;  // the empty word, centrally harmless
  rep.central_count = 1;
  for (Partial& part : parts) {
    rep.words_scanned += part.scanned;
    rep.central_count += part.central;
    rep.violations.insert(rep.violations.end(), part.violations.begin(),
                          part.violations.end());
  }
  keep_sorted_prefix(rep.violations);
  return rep;
}

AgreementReport check_solver_agreement(const FamilyId& family,
                                       const ScanOptions& opts) {
  RewriteSystem sys = rewrite_system(family);  // validates the family
  enforce_budget(opts.max_len, opts.budget_cap, 2);
  std::function<bool(const Word&)> is_ident;
  if (family.kind == FamilyKind::Tor) {
    is_ident = [&](const Word& w) {
      return tor_normal_form(w, family.m, family.n).is_identity();
    };
  } else {
    GroupHomomorphismSpec fwd = verified_artin_map(family.m);
    is_ident = [fwd](const Word& w) { return artin_quick_via(w, fwd); };
  }

  struct Partial {
    long long scanned = 0, ident = 0;
    std::vector<Word> bad;
  };
  std::vector<Letter> firsts = alphabet_letters({'a', 'b'});
  auto shard = [&](Letter first) {
    Partial part;
    // One verdict cache per shard: every explored word carries its whole
    // search component with it, so repeat queries in the same class are
    // near-free.
    std::unordered_map<std::string, bool> cache;
    for_each_reduced_word({'a', 'b'}, opts.max_len, first, [&](const Word& w) {
      ++part.scanned;
      bool nf = is_ident(w);
      bool rw = rewrite_identity_cached(w, sys, cache);
      if (nf) ++part.ident;
      if (nf != rw && part.bad.size() < kMaxListedWords) {
        part.bad.push_back(w);
      }
    });
    return part;
  };
  std::vector<Partial> parts = run_sharded<Partial>(firsts, opts.jobs, shard);

  AgreementReport rep;
  rep.family = family;
  rep.max_len = opts.max_len;
  rep.words_scanned = 1;  // empty word: both solvers say identity
  rep.identity_words = 1;
  for (Partial& part : parts) {
    rep.words_scanned += part.scanned;
    rep.identity_words += part.ident;
    rep.disagreements.insert(rep.disagreements.end(), part.bad.begin(),
                             part.bad.end());
  }
  keep_sorted_prefix(rep.disagreements);
  return rep;
}

}  // namespace cx2

#pragma once

#include <optional>
#include <string>

#include "trigonal/diagram.hpp"

// The rewrite rule catalog on diagram words.
//
// Rules in their right-end / interior orientation, x and y the untouched
// prefix and suffix:
//
//   Z_DROP      D(x, m, 0)                     -> D(x)
//   Z_MERGE     D(x, m, 0, n, y)               -> D(x, m+n, y)
//   ONE_ABSORB  D(x, m, e), e = +-1            -> D(x, m+e)
//   TWO_FLIP    D(x, m, -2), m > 0             -> D(x, m-1, 2)
//   TRIPLE_END  D(x, m, -1, n), m > 0          -> D(x, m-1, -n+1)
//   FIVE_SLIDE  D(x, m, -1, 1, n, p, y), m > 0 -> D(x, m-n, -1, 1+p, y)
//               D(x, m, -1, 1, n), m > 0       -> D(x, m-n-1)
//   PLATEAU     D(x, m, -1, n, p, y), m > 0    -> D(x, m-1, -n, 1, p-1, y)
//   LAGRANGE    D(x, m, -n, -y)                -> D(x, m-e, e, n-e, y), e = +-1
//
// Interior rules hold as exact continuant-matrix identities, end rules up to
// a global sign, so every application preserves the link class.  Each rule
// also exists sign-negated (negate, rewrite, negate back) and mirrored onto
// the left end.  Mirroring conjugates by the half-turn reading of the word,
// which is parity-aware: rho(v) = reverse(v), negated entrywise when |v| is
// even.  A plain reversal flips the residue class on even lengths (the
// continuant determinant changes sign), while rho preserves the class for
// every word, so rho-conjugated rewrites are sound everywhere; the class is
// still re-checked on each reversed candidate as a guard against slips.
// Every emitted instance has crossing delta <= 0, and since no rule
// lengthens the word, complexity delta <= 0 follows.
//
// LAGRANGE lengthens the word and may increase crossings; it is never
// emitted by enumerate_moves and is applied through lagrange_apply.

namespace trigonal {

enum class RuleId { Z_DROP, Z_MERGE, ONE_ABSORB, TWO_FLIP, TRIPLE_END, FIVE_SLIDE, PLATEAU, LAGRANGE };

inline const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::Z_DROP: return "Z_DROP";
    case RuleId::Z_MERGE: return "Z_MERGE";
    case RuleId::ONE_ABSORB: return "ONE_ABSORB";
    case RuleId::TWO_FLIP: return "TWO_FLIP";
    case RuleId::TRIPLE_END: return "TRIPLE_END";
    case RuleId::FIVE_SLIDE: return "FIVE_SLIDE";
    case RuleId::PLATEAU: return "PLATEAU";
    case RuleId::LAGRANGE: return "LAGRANGE";
  }
  return "?";
}

struct MoveInstance {
  RuleId rule = RuleId::Z_DROP;
  int start = 0;  // leftmost touched index in the word as given
  int span = 0;   // number of entries matched
  bool negated = false;
  bool reversed = false;
  std::int64_t param = 0;  // e for ONE_ABSORB / LAGRANGE, otherwise 0
  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

namespace detail {

// Match `rule` with window length `span` at position j of t, in direct
// orientation, and return the rewritten word.  nullopt when the pattern or
// its guard fails.
inline std::optional<Word> rewrite_direct(const Word& t, RuleId rule, std::size_t j, int span,
                                          std::int64_t& param) {
  const std::size_t k = t.size();
  const std::size_t len = static_cast<std::size_t>(span);
  if (len > k || j > k - len) return std::nullopt;
  const bool at_end = j + len == k;
  Word repl;
  switch (rule) {
    case RuleId::Z_DROP:
      if (span != 2 || !at_end || t[j + 1] != 0) return std::nullopt;
      break;
    case RuleId::Z_MERGE:
      if (span != 3 || t[j + 1] != 0) return std::nullopt;
      repl = {checked_add(t[j], t[j + 2])};
      break;
    case RuleId::ONE_ABSORB:
      if (span != 2 || !at_end || (t[j + 1] != 1 && t[j + 1] != -1)) return std::nullopt;
      param = t[j + 1];
      repl = {checked_add(t[j], t[j + 1])};
      break;
    case RuleId::TWO_FLIP:
      if (span != 2 || !at_end || t[j + 1] != -2 || t[j] <= 0) return std::nullopt;
      repl = {t[j] - 1, 2};
      break;
    case RuleId::TRIPLE_END:
      if (span != 3 || !at_end || t[j + 1] != -1 || t[j] <= 0) return std::nullopt;
      repl = {t[j] - 1, checked_add(1, -t[j + 2])};
      break;
    case RuleId::FIVE_SLIDE:
      if (t[j] <= 0 || t[j + 1] != -1 || t[j + 2] != 1) return std::nullopt;
      if (span == 5) {
        repl = {checked_add(t[j], -t[j + 3]), -1, checked_add(1, t[j + 4])};
      } else if (span == 4 && at_end) {
        repl = {checked_add(checked_add(t[j], -t[j + 3]), -1)};
      } else {
        return std::nullopt;
      }
      break;
    case RuleId::PLATEAU:
      if (span != 4 || t[j + 1] != -1 || t[j] <= 0) return std::nullopt;
      repl = {t[j] - 1, -t[j + 2], 1, t[j + 3] - 1};
      break;
    default:
      return std::nullopt;
  }
  Word out(t.begin(), t.begin() + j);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), t.begin() + j + len, t.end());
  return out;
}

// Half-turn reading of a word; an involution that preserves the link class
// for every length.
inline Word rho(Word w) {
  std::reverse(w.begin(), w.end());
  if (w.size() % 2 == 0)
    for (auto& m : w) m = -m;
  return w;
}

// Rewrite under the variant flags: j is the window position in the
// transformed word (rho first, then negation).
inline std::optional<Word> rewrite_variant(const Word& w, RuleId rule, int span, std::size_t j,
                                           bool neg, bool rev, std::int64_t& param) {
  Word t = rev ? rho(w) : w;
  if (neg)
    for (auto& m : t) m = -m;
  auto r = rewrite_direct(t, rule, j, span, param);
  if (!r) return std::nullopt;
  if (neg) {
    for (auto& m : *r) m = -m;
    param = -param;
  }
  if (rev) *r = rho(std::move(*r));
  return r;
}

struct Pattern {
  RuleId rule;
  int span;
};

inline constexpr Pattern kPatterns[] = {
    {RuleId::Z_DROP, 2},    {RuleId::Z_MERGE, 3},    {RuleId::ONE_ABSORB, 2},
    {RuleId::TWO_FLIP, 2},  {RuleId::TRIPLE_END, 3}, {RuleId::FIVE_SLIDE, 5},
    {RuleId::FIVE_SLIDE, 4}, {RuleId::PLATEAU, 4},
};

// Z_DROP, Z_MERGE and ONE_ABSORB are their own negations; Z_MERGE's window
// relation is symmetric under reversal.  Skipping the redundant variants
// keeps the instance list duplicate-free.
inline bool redundant_variant(RuleId rule, bool neg, bool rev) {
  if (neg && (rule == RuleId::Z_DROP || rule == RuleId::Z_MERGE || rule == RuleId::ONE_ABSORB))
    return true;
  if (rev && rule == RuleId::Z_MERGE) return true;
  return false;
}

}  // namespace detail

namespace detail {

// Applicable instances together with their rewritten words, ordered by
// (start, rule, span, negated, reversed).
inline std::vector<std::pair<MoveInstance, Word>> instances_with_results(const Word& w) {
  const std::size_t k = w.size();
  std::vector<std::pair<MoveInstance, Word>> out;
  std::optional<LinkClass> cls;
  const std::int64_t crossings = crossing_count(w);
  for (const auto& pat : kPatterns) {
    const std::size_t len = static_cast<std::size_t>(pat.span);
    if (len > k) continue;
    for (bool neg : {false, true}) {
      if (redundant_variant(pat.rule, neg, false)) continue;
      for (bool rev : {false, true}) {
        if (redundant_variant(pat.rule, false, rev)) continue;
        for (std::size_t j = 0; j + len <= k; ++j) {
          std::int64_t param = 0;
          auto r = rewrite_variant(w, pat.rule, pat.span, j, neg, rev, param);
          if (!r) continue;
          if (crossing_count(*r) > crossings) continue;
          if (rev) {
            if (!cls) cls = link_class(w);
            if (link_class(*r) != *cls) continue;
          }
          const int start = rev ? static_cast<int>(k - j - len) : static_cast<int>(j);
          out.emplace_back(MoveInstance{pat.rule, start, pat.span, neg, rev, param},
                           std::move(*r));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const MoveInstance &a = x.first, &b = y.first;
    if (a.start != b.start) return a.start < b.start;
    if (a.rule != b.rule) return a.rule < b.rule;
    if (a.span != b.span) return a.span < b.span;
    if (a.negated != b.negated) return !a.negated;
    return !a.reversed && b.reversed;
  });
  return out;
}

}  // namespace detail

// All applicable slide instances, ordered by (start, rule, span, negated,
// reversed).  Reversed instances that would change the link class are
// suppressed.
inline std::vector<MoveInstance> enumerate_moves(const Word& w) {
  std::vector<MoveInstance> out;
  for (auto& [inst, result] : detail::instances_with_results(w)) out.push_back(inst);
  return out;
}

// Applies a validated instance; a stale or mismatched instance throws.
inline Word apply_move(const Word& w, const MoveInstance& inst) {
  const std::size_t k = w.size();
  const std::size_t len = static_cast<std::size_t>(inst.span);
  if (inst.start < 0 || len > k || static_cast<std::size_t>(inst.start) > k - len)
    throw std::invalid_argument("apply_move: instance does not fit the word");
  const std::size_t j =
      inst.reversed ? k - len - static_cast<std::size_t>(inst.start) : static_cast<std::size_t>(inst.start);
  std::int64_t param = 0;
  auto r = detail::rewrite_variant(w, inst.rule, inst.span, j, inst.negated, inst.reversed, param);
  if (!r) throw std::invalid_argument("apply_move: instance does not match the word");
  if (inst.rule == RuleId::ONE_ABSORB && param != inst.param)
    throw std::invalid_argument("apply_move: instance does not match the word");
  if (crossing_count(*r) > crossing_count(w))
    throw std::invalid_argument("apply_move: instance would increase crossings");
  if (inst.reversed && link_class(*r) != link_class(w))
    throw std::invalid_argument("apply_move: reversed instance does not preserve the link class");
  return *r;
}

// Exact (crossing, complexity) deltas of a valid instance; both are <= 0.
inline std::pair<std::int64_t, std::int64_t> move_deltas(const Word& w, const MoveInstance& inst) {
  const Word r = apply_move(w, inst);
  return {crossing_count(r) - crossing_count(w), complexity(r) - complexity(w)};
}

// D(x, m, -n, -y) -> D(x, m-e, e, n-e, y) at `pos` (the index of m); the
// entries after pos+1 all flip sign.  Class-preserving but may increase
// crossings, so it never takes part in the slide search.
inline Word lagrange_apply(const Word& w, std::size_t pos, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("lagrange_apply: eps must be +-1");
  if (pos + 1 >= w.size())
    throw std::invalid_argument("lagrange_apply: need an entry after the position");
  const std::int64_t m = w[pos];
  const std::int64_t n = -w[pos + 1];
  Word out(w.begin(), w.begin() + pos);
  out.push_back(checked_add(m, -eps));
  out.push_back(eps);
  out.push_back(checked_add(n, -eps));
  for (std::size_t i = pos + 2; i < w.size(); ++i) out.push_back(-w[i]);
  return out;
}

// One line of the stable trace format:
//   D(2,1,-1,-2) --TRIPLE_END@1--> D(2,0,3)
// with ~neg / ~rev suffixes after the position when the flags are set.
inline std::string trace_line(const Word& from, const MoveInstance& inst, const Word& to) {
  std::string s = format_word(from);
  s += " --";
  s += rule_name(inst.rule);
  s += '@';
  s += std::to_string(inst.start);
  if (inst.negated) s += "~neg";
  if (inst.reversed) s += "~rev";
  s += "--> ";
  s += format_word(to);
  return s;
}

}  // namespace trigonal

#pragma once

#include "trigonal/moves.hpp"

// Constructive generators: for an all-positive word with k >= 3 and both
// ends >= 2, produce class-equal diagrams that no crossing-non-increasing
// move can simplify.  Both generators re-evaluate their output against the
// input before returning, so a construction slip surfaces immediately.

namespace trigonal {

struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

namespace detail {

inline void require_generator_input(const Word& w) {
  if (w.size() < 3 || w.front() < 2 || w.back() < 2 ||
      !std::all_of(w.begin(), w.end(), [](std::int64_t m) { return m >= 1; }))
    throw std::invalid_argument(
        "generator needs an all-positive word of length >= 3 with both ends >= 2");
}

}  // namespace detail

// D(x, m+1, -1, 1-a, -n) for trailing triple (m, a, n) with a > 1, or
// D(x, m+1, -n-1) when a = 1.  Class-equal to the input and never
// alternating.
inline Word awkward_diagram(const Word& normal) {
  detail::require_generator_input(normal);
  const std::size_t k = normal.size();
  const std::int64_t m = normal[k - 3], a = normal[k - 2], n = normal[k - 1];
  Word out(normal.begin(), normal.end() - 3);
  if (a == 1) {
    out.push_back(m + 1);
    out.push_back(-n - 1);
  } else {
    out.push_back(m + 1);
    out.push_back(-1);
    out.push_back(1 - a);
    out.push_back(-n);
  }
  if (!same_link(normal, out)) throw std::logic_error("awkward_diagram: class drifted");
  return out;
}

// Trailing triple (m, a, n) becomes m+1 followed by the entrywise-negated
// staircase word of (a, n).  When the untouched prefix still holds entries
// equal to 1 the result would miss the |mi| >= 2 requirement, so those are
// collapsed with the identity [x, u, 1, t1, t2, ...] = [x, u+1, -(t1+1),
// -t2, ...], which is value-exact and removes one 1 per application.
inline Word hard_diagram(const Word& normal) {
  detail::require_generator_input(normal);
  const std::size_t k = normal.size();
  const std::int64_t m = normal[k - 3], a = normal[k - 2], n = normal[k - 1];
  Word out(normal.begin(), normal.end() - 3);
  out.push_back(m + 1);
  for (std::int64_t v : staircase(a, n)) out.push_back(-v);
  for (;;) {
    std::size_t prefix = 0;
    while (prefix < out.size() && out[prefix] > 0) ++prefix;
    std::size_t one = prefix;
    while (one > 0 && out[one - 1] != 1) --one;
    if (one == 0) break;
    const std::size_t j = one - 1;  // rightmost 1 in the positive prefix
    Word next(out.begin(), out.begin() + j - 1);
    next.push_back(out[j - 1] + 1);
    next.push_back(-(out[j + 1] + 1));
    for (std::size_t i = j + 2; i < out.size(); ++i) next.push_back(-out[i]);
    out = std::move(next);
  }
  if (!same_link(normal, out)) throw std::logic_error("hard_diagram: class drifted");
  if (!is_hard(out)) throw std::logic_error("hard_diagram: output is not hard");
  return out;
}

// `steps` seeded random class-preserving rewrites: Lagrange steps plus
// right-hand sides of the zero and absorb rules rewritten backwards.  No-op
// when nothing applies (the empty word).
inline Word scramble(const Word& word, int steps, std::uint64_t seed) {
  SplitMix64 rng{seed};
  Word cur = word;
  for (int s = 0; s < steps; ++s) {
    std::vector<Word> candidates;
    const std::size_t k = cur.size();
    for (std::size_t pos = 0; pos + 1 < k; ++pos)
      for (int eps : {1, -1}) candidates.push_back(lagrange_apply(cur, pos, eps));
    if (k >= 1) {
      for (int eps : {1, -1}) {  // inverse of ONE_ABSORB
        Word w2(cur.begin(), cur.end() - 1);
        w2.push_back(cur.back() - eps);
        w2.push_back(eps);
        candidates.push_back(std::move(w2));
      }
      for (std::int64_t t : {-2, -1, 0, 1, 2}) {  // inverse of Z_DROP
        Word w2 = cur;
        w2.push_back(t);
        w2.push_back(0);
        candidates.push_back(std::move(w2));
      }
      for (std::size_t pos = 0; pos < k; ++pos)  // inverse of Z_MERGE
        for (std::int64_t t : {-1, 1}) {
          Word w2(cur.begin(), cur.begin() + pos);
          w2.push_back(t);
          w2.push_back(0);
          w2.push_back(cur[pos] - t);
          w2.insert(w2.end(), cur.begin() + pos + 1, cur.end());
          candidates.push_back(std::move(w2));
        }
    }
    if (candidates.empty()) break;
    Word pick = candidates[rng.below(candidates.size())];
    if (!same_link(cur, pick)) throw std::logic_error("scramble: class drifted");
    cur = std::move(pick);
  }
  return cur;
}

}  // namespace trigonal

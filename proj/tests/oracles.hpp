#pragma once

// Independent oracles used by the tests.  These deliberately avoid the
// library's evaluation and search paths: nested rational arithmetic instead
// of continuant matrices, a direct recursive counter instead of the word
// enumerator, and a stack-driven reachability walk instead of the BFS.

#include <optional>
#include <set>

#include "trigonal/search.hpp"

namespace oracle {

struct Rat {
  __int128 num = 0;
  __int128 den = 1;
};

// m1 + 1/(m2 + ...), folded right to left with exact rationals; nullopt when
// an intermediate value is zero and the next step would divide by it.
inline std::optional<Rat> eval_nested(const trigonal::Word& w) {
  if (w.empty()) return std::nullopt;
  Rat v{w.back(), 1};
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    if (v.num == 0) return std::nullopt;
    v = Rat{w[i] * v.num + v.den, v.num};
  }
  return v;
}

// Projective agreement of the library pair with the nested value.
inline bool matches(const trigonal::SchubertPair& p, const Rat& r) {
  return static_cast<__int128>(p.alpha) * r.den == static_cast<__int128>(p.beta) * r.num;
}

// Number of zero-free words within the bounds, counted directly.
inline std::int64_t count_words(std::int64_t max_crossings, std::int64_t max_length,
                                std::int64_t entry_bound) {
  std::int64_t total = 0;
  const std::function<std::int64_t(std::int64_t, std::int64_t)> rec =
      [&](std::int64_t k, std::int64_t weight) -> std::int64_t {
    if (k == 0) return 1;
    std::int64_t n = 0;
    for (std::int64_t mag = 1; mag <= std::min(entry_bound, weight); ++mag)
      n += 2 * rec(k - 1, weight - mag);
    return n;
  };
  for (std::int64_t k = 1; k <= max_length; ++k) total += rec(k, max_crossings);
  return total;
}

// Reachable set computed with a stack discipline instead of the queue.
inline std::set<trigonal::Word> closure_lifo(const trigonal::Word& start) {
  std::set<trigonal::Word> seen{start};
  std::vector<trigonal::Word> stack{start};
  while (!stack.empty()) {
    const trigonal::Word w = stack.back();
    stack.pop_back();
    for (const auto& inst : trigonal::enumerate_moves(w)) {
      trigonal::Word next = trigonal::apply_move(w, inst);
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace oracle

#pragma once

#include <functional>
#include <unordered_map>

#include "trigonal/moves.hpp"

// Breadth-first exploration of the catalog-move graph.  Catalog moves never
// lengthen a word and never increase its crossing count, so the reachable set
// is finite and the search always terminates; max_states bounds the explored
// set and exhausting it is reported as a first-class Budget status, never an
// exception.  Exploration order is fixed (queue order, instances in
// enumeration order), so all results are deterministic.

namespace trigonal {

struct SearchLimits {
  std::size_t max_states = 200000;
  std::size_t max_length = 0;  // 0: capped at the starting length
};

enum class SearchStatus { Complete, Budget };

struct SimplifyStep {
  MoveInstance move;
  Word to;
};

struct SimplifyPath {
  Word start;
  std::vector<SimplifyStep> steps;
  const Word& final_word() const { return steps.empty() ? start : steps.back().to; }
};

namespace detail {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t m : w) {
      h ^= static_cast<std::size_t>(m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Exploration {
  SearchStatus status = SearchStatus::Complete;
  std::vector<Word> order;  // discovery order; order[0] is the start word
  std::vector<std::pair<int, MoveInstance>> parent;
};

inline Exploration explore(const Word& start, const SearchLimits& limits) {
  Exploration ex;
  const std::size_t cap_states = limits.max_states ? limits.max_states : 1;
  const std::size_t cap_length = limits.max_length ? limits.max_length : start.size();
  std::unordered_map<Word, int, WordHash> seen;
  ex.order.push_back(start);
  ex.parent.emplace_back(-1, MoveInstance{});
  seen.emplace(start, 0);
  for (std::size_t head = 0; head < ex.order.size(); ++head) {
    const Word w = ex.order[head];
    for (auto& [inst, next] : detail::instances_with_results(w)) {
      if (next.size() > cap_length) continue;
      if (seen.count(next)) continue;
      if (ex.order.size() >= cap_states) {
        ex.status = SearchStatus::Budget;
        return ex;
      }
      seen.emplace(next, static_cast<int>(ex.order.size()));
      ex.order.push_back(std::move(next));
      ex.parent.emplace_back(static_cast<int>(head), inst);
    }
  }
  return ex;
}

inline SimplifyPath path_to(const Exploration& ex, int idx) {
  std::vector<SimplifyStep> steps;
  for (int i = idx; ex.parent[i].first >= 0; i = ex.parent[i].first)
    steps.push_back({ex.parent[i].second, ex.order[i]});
  std::reverse(steps.begin(), steps.end());
  return {ex.order[0], std::move(steps)};
}

// Tie-break order for representatives: complexity, then length, then entries.
inline bool rep_less(const Word& a, const Word& b) {
  const std::int64_t ca = complexity(a), cb = complexity(b);
  if (ca != cb) return ca < cb;
  return word_less(a, b);
}

}  // namespace detail

struct ClosureResult {
  SearchStatus status = SearchStatus::Complete;
  std::vector<Word> words;  // sorted by word_less; includes the start word
};

// Every word reachable by catalog moves (the start included); Budget status
// carries the partial set explored so far.
inline ClosureResult closure(const Word& w, const SearchLimits& limits = {}) {
  auto ex = detail::explore(w, limits);
  ClosureResult res{ex.status, std::move(ex.order)};
  std::sort(res.words.begin(), res.words.end(), word_less);
  return res;
}

struct MinimizeResult {
  SearchStatus status = SearchStatus::Complete;
  Word word;  // minimal by (complexity, length, entries) among words explored
  SimplifyPath path;
};

inline MinimizeResult minimize(const Word& w, const SearchLimits& limits = {}) {
  const auto ex = detail::explore(w, limits);
  int best = 0;
  for (int i = 1; i < static_cast<int>(ex.order.size()); ++i)
    if (detail::rep_less(ex.order[i], ex.order[best])) best = i;
  return {ex.status, ex.order[best], detail::path_to(ex, best)};
}

enum class SimpleVerdict { Simple, NotSimple, Unknown };

// True when no reachable word has lower complexity.  A budgeted search that
// already found a smaller word is conclusive; one that did not is Unknown.
inline SimpleVerdict is_catalog_simple(const Word& w, const SearchLimits& limits = {}) {
  const auto m = minimize(w, limits);
  if (complexity(m.word) < complexity(w)) return SimpleVerdict::NotSimple;
  return m.status == SearchStatus::Complete ? SimpleVerdict::Simple : SimpleVerdict::Unknown;
}

struct SimplifyResult {
  enum class Kind { Reached, NotReached, Budget };
  Kind kind = Kind::NotReached;
  SimplifyPath path;        // valid when Reached
  std::vector<Word> minima; // minimal-complexity reachable words, for diagnosis
  SearchStatus closure_status = SearchStatus::Complete;
  const Word& final_word() const { return path.final_word(); }
};

namespace detail {

inline SimplifyResult search_to_target(const Word& w, const SearchLimits& limits,
                                       const std::function<bool(const Word&)>& target) {
  SimplifyResult res;
  if (target(w)) {  // already there: empty path, no exploration
    res.kind = SimplifyResult::Kind::Reached;
    res.path.start = w;
    return res;
  }
  const auto ex = explore(w, limits);
  res.closure_status = ex.status;
  int best = -1;
  for (int i = 0; i < static_cast<int>(ex.order.size()); ++i) {
    if (!target(ex.order[i])) continue;
    if (best < 0 || rep_less(ex.order[i], ex.order[best])) best = i;
  }
  if (best >= 0) {
    res.kind = SimplifyResult::Kind::Reached;
    res.path = path_to(ex, best);
    return res;
  }
  res.kind = ex.status == SearchStatus::Complete ? SimplifyResult::Kind::NotReached
                                                 : SimplifyResult::Kind::Budget;
  std::int64_t low = complexity(ex.order[0]);
  for (const Word& u : ex.order) low = std::min(low, complexity(u));
  for (const Word& u : ex.order)
    if (complexity(u) == low) res.minima.push_back(u);
  std::sort(res.minima.begin(), res.minima.end(), word_less);
  res.path.start = w;
  return res;
}

}  // namespace detail

// Path to the best reachable alternating word (by the minimize tie-break);
// NotReached carries the minimal reachable words for diagnosis.
inline SimplifyResult simplify_to_alternating(const Word& w, const SearchLimits& limits = {}) {
  return detail::search_to_target(w, limits, [](const Word& u) { return is_alternating(u); });
}

}  // namespace trigonal

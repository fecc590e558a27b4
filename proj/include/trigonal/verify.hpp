#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <set>

#include <json.hpp>

#include "trigonal/generators.hpp"
#include "trigonal/search.hpp"

// Desk-scale verification harnesses.  Each harness sweeps a bounded,
// deterministically ordered space of diagram words, asserts one statement on
// every instance, and aggregates the violations into a VerifyReport.  Budget
// exhaustion inside a search is recorded per word as its own failure kind so
// "disproved" and "ran out" stay distinguishable.

namespace trigonal {

struct EnumBounds {
  std::int64_t max_crossings = 0;
  std::int64_t max_length = 0;
  std::int64_t entry_bound = 0;
};

// Zero-free words within the bounds, length-major, entries ranked
// 1, -1, 2, -2, ... at each position.  The continuant product is carried
// through the recursion, so each word arrives with its pair already
// evaluated.
inline void for_each_word_pair(const EnumBounds& b,
                               const std::function<void(const Word&, const SchubertPair&)>& fn) {
  if (b.max_length < 1 || b.max_crossings < 1 || b.entry_bound < 1) return;
  Word cur;
  const std::function<void(std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                           std::int64_t)>
      rec = [&](std::int64_t k, std::int64_t weight, std::int64_t a, std::int64_t bb,
                std::int64_t c, std::int64_t d) {
        if (k == 0) {
          SchubertPair f{a, c};
          if (f.alpha < 0 || (f.alpha == 0 && f.beta < 0)) {
            f.alpha = -f.alpha;
            f.beta = -f.beta;
          }
          if (f.alpha == 0) f.beta = 1;
          fn(cur, f);
          return;
        }
        if (weight < k) return;  // each remaining entry needs magnitude >= 1
        const std::int64_t cap = std::min(b.entry_bound, weight - (k - 1));
        for (std::int64_t mag = 1; mag <= cap; ++mag)
          for (int sign : {1, -1}) {
            const std::int64_t m = sign * mag;
            cur.push_back(m);
            rec(k - 1, weight - mag, checked_add(checked_mul(a, m), bb),
                a, checked_add(checked_mul(c, m), d), c);
            cur.pop_back();
          }
      };
  for (std::int64_t k = 1; k <= b.max_length; ++k) rec(k, b.max_crossings, 1, 0, 0, 1);
}

inline void for_each_word(const EnumBounds& b, const std::function<void(const Word&)>& fn) {
  for_each_word_pair(b, [&](const Word& w, const SchubertPair&) { fn(w); });
}

inline std::vector<Word> enumerate_words(const EnumBounds& b) {
  std::vector<Word> out;
  for_each_word(b, [&](const Word& w) { out.push_back(w); });
  return out;
}

inline std::vector<Word> words_in_class(const LinkClass& c, const EnumBounds& b) {
  std::vector<Word> out;
  for_each_word_pair(b, [&](const Word& w, const SchubertPair& f) {
    if (f.alpha != c.alpha) return;
    if (c.alpha > 1) {
      std::int64_t r = f.beta % f.alpha;
      if (r < 0) r += f.alpha;
      if (std::find(c.residues.begin(), c.residues.end(), r) == c.residues.end()) return;
    }
    out.push_back(w);
  });
  return out;
}

struct VerifyFailure {
  Word word;
  std::string detail;
};

struct VerifyReport {
  std::string harness;
  nlohmann::json bounds;  // bounds / limits echo
  std::optional<std::uint64_t> seed;
  std::int64_t tested = 0;
  std::vector<VerifyFailure> failures;
  std::vector<VerifyFailure> diagnostics;  // reported but not counted as failure
  std::int64_t elapsed_ms = 0;

  bool ok() const { return failures.empty(); }
  bool budget_hit() const {
    return std::any_of(failures.begin(), failures.end(), [](const VerifyFailure& f) {
      return f.detail.find("budget") != std::string::npos;
    });
  }

  void sort_entries() {
    auto lt = [](const VerifyFailure& a, const VerifyFailure& b) {
      if (a.word != b.word) return word_less(a.word, b.word);
      return a.detail < b.detail;
    };
    std::sort(failures.begin(), failures.end(), lt);
    std::sort(diagnostics.begin(), diagnostics.end(), lt);
  }

  nlohmann::json to_json(bool with_timing = false) const {
    auto dump = [](const std::vector<VerifyFailure>& v) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& f : v) arr.push_back({{"word", format_word(f.word)}, {"detail", f.detail}});
      return arr;
    };
    nlohmann::json j{{"harness", harness},
                     {"bounds", bounds},
                     {"seed", seed ? nlohmann::json(*seed) : nlohmann::json()},
                     {"tested", tested},
                     {"failures", dump(failures)}};
    if (!diagnostics.empty()) j["diagnostics"] = dump(diagnostics);
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

inline nlohmann::json class_to_json(const LinkClass& c) {
  return {{"alpha", c.alpha}, {"residues", c.residues}};
}

inline nlohmann::json bounds_to_json(const EnumBounds& b) {
  return {{"max_crossings", b.max_crossings},
          {"max_length", b.max_length},
          {"entry_bound", b.entry_bound}};
}

namespace detail {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

}  // namespace detail

// Every word of class c within the bounds must reach an alternating word by
// catalog moves (for alpha <= 1: a crossing-free word).
inline VerifyReport check_alternating_reachability(const LinkClass& c, const EnumBounds& b,
                                                   const SearchLimits& limits = {}) {
  detail::Stopwatch watch;
  VerifyReport rep;
  rep.harness = "thm1";
  rep.bounds = {{"class", class_to_json(c)}, {"enum", bounds_to_json(b)}};
  if (!is_torus_or_twist(c))
    throw std::invalid_argument("thm1 harness: class is not of torus or twist form");
  // The split class alpha = 0 has no alternating words at all; a crossing-free
  // word is its trivial presentation.
  const bool trivial = c.alpha <= 1;
  const auto target = [&](const Word& u) {
    return is_alternating(u) || (trivial && crossing_count(u) == 0);
  };
  for (const Word& w : words_in_class(c, b)) {
    ++rep.tested;
    const auto res = detail::search_to_target(w, limits, target);
    if (res.kind == SimplifyResult::Kind::Reached) continue;
    rep.failures.push_back({w, res.kind == SimplifyResult::Kind::Budget
                                   ? "budget exhausted before an alternating word was found"
                                   : "no alternating word reachable"});
  }
  rep.sort_entries();
  rep.elapsed_ms = watch.ms();
  return rep;
}

// The torus words C(m), m = 2..7, the twist words C(m,n), m,n in {2,3,4},
// and all their mirrors.
inline std::vector<LinkClass> torus_twist_roster() {
  std::set<LinkClass> set;
  for (std::int64_t m = 2; m <= 7; ++m) {
    const LinkClass c = link_class(Word{m});
    set.insert(c);
    set.insert(mirror_class(c));
  }
  for (std::int64_t m = 2; m <= 4; ++m)
    for (std::int64_t n = 2; n <= 4; ++n) {
      const LinkClass c = link_class(Word{m, n});
      set.insert(c);
      set.insert(mirror_class(c));
    }
  return {set.begin(), set.end()};
}

// Roster sweep: bounds per class are crossings(normal form) + margin.
inline VerifyReport check_alternating_reachability_roster(std::int64_t margin = 2,
                                                          std::int64_t max_length = 7,
                                                          std::int64_t entry_bound = 10,
                                                          const SearchLimits& limits = {}) {
  detail::Stopwatch watch;
  VerifyReport rep;
  rep.harness = "thm1";
  nlohmann::json classes = nlohmann::json::array();
  for (const LinkClass& c : torus_twist_roster()) {
    const EnumBounds b{crossing_count(normal_form(c)) + margin, max_length, entry_bound};
    classes.push_back(class_to_json(c));
    VerifyReport one = check_alternating_reachability(c, b, limits);
    rep.tested += one.tested;
    for (auto& f : one.failures) {
      f.detail = "class " + class_to_json(c).dump() + ": " + f.detail;
      rep.failures.push_back(std::move(f));
    }
  }
  rep.bounds = {{"classes", classes},
                {"crossings_margin", margin},
                {"max_length", max_length},
                {"entry_bound", entry_bound}};
  rep.sort_entries();
  rep.elapsed_ms = watch.ms();
  return rep;
}

// Structural conditions every catalog-simple word of length > 1 must satisfy.
// Right-end and interior clauses are hard failures; clauses that only a
// left-end move could repair go to the diagnostics bucket.  Left-end rewrites
// pass through the class gate, so the two buckets are kept separate in case a
// gated word shows up; with the half-turn variants both stay empty at desk
// bounds.
inline VerifyReport check_simple_diagram_conditions(const EnumBounds& b,
                                                    const SearchLimits& limits = {}) {
  detail::Stopwatch watch;
  VerifyReport rep;
  rep.harness = "prop";
  rep.bounds = bounds_to_json(b);
  for_each_word(b, [&](const Word& w) {
    const std::size_t k = w.size();
    if (k < 2) return;
    const auto verdict = is_catalog_simple(w, limits);
    if (verdict == SimpleVerdict::Unknown) {
      ++rep.tested;
      rep.failures.push_back({w, "budget exhausted while deciding simplicity"});
      return;
    }
    if (verdict != SimpleVerdict::Simple) return;
    ++rep.tested;
    auto right = [&](const std::string& d) { rep.failures.push_back({w, "right/interior: " + d}); };
    auto left = [&](const std::string& d) { rep.diagnostics.push_back({w, "left-end: " + d}); };
    const auto mag = [](std::int64_t v) { return v < 0 ? -v : v; };
    if (mag(w[k - 1]) < 2) right("|m_k| >= 2 fails");
    if (mag(w[0]) < 2) left("|m_1| >= 2 fails");
    for (std::size_t i = 1; i + 1 < k; ++i)
      if (w[i] == 0) right("interior zero at " + std::to_string(i));
    if (mag(w[k - 1]) == 2 && w[k - 2] * w[k - 1] <= 0) right("end pair sign condition fails");
    if (mag(w[0]) == 2 && w[0] * w[1] <= 0) left("end pair sign condition fails");
    for (std::size_t i = 1; i < k; ++i)
      if (w[i - 1] * w[i] == -1) {
        const std::string d = "adjacent unit pair at " + std::to_string(i - 1);
        if (i == 1) left(d); else right(d);
      }
    for (std::size_t i = 1; i + 1 < k; ++i) {
      if (mag(w[i]) != 1) continue;
      if (w[i - 1] * w[i] < 0) {  // right-facing clause
        if (i + 2 >= k)
          right("unit at " + std::to_string(i) + " too close to the right end");
        else if (w[i] * w[i + 1] <= 0 || w[i] * w[i + 2] <= 0)
          right("unit at " + std::to_string(i) + " lacks same-sign right context");
      }
      if (w[i] * w[i + 1] < 0) {  // left-facing clause
        if (i < 2)
          left("unit at " + std::to_string(i) + " too close to the left end");
        else if (w[i - 2] * w[i] <= 0 || w[i - 1] * w[i] <= 0)
          left("unit at " + std::to_string(i) + " lacks same-sign left context");
      }
    }
  });
  rep.sort_entries();
  rep.elapsed_ms = watch.ms();
  return rep;
}

// Arithmetic facts about fractions of words satisfying m_1 > 0, |m_k| >= 2
// and, for i >= 2, |m_i| != 1 or m_{i-1} m_i > 0.  The later clauses only
// apply when their extra side conditions hold.
inline VerifyReport check_fraction_bounds(const EnumBounds& b) {
  detail::Stopwatch watch;
  VerifyReport rep;
  rep.harness = "lemma";
  rep.bounds = bounds_to_json(b);
  const auto mag = [](std::int64_t v) { return v < 0 ? -v : v; };
  for_each_word_pair(b, [&](const Word& w, const SchubertPair& f) {
    const std::size_t k = w.size();
    if (w[0] <= 0 || mag(w[k - 1]) < 2) return;
    for (std::size_t i = 1; i < k; ++i)
      if (mag(w[i]) == 1 && w[i - 1] * w[i] <= 0) return;
    ++rep.tested;
    // (a): value > m_1 - 1, hence alpha > 0 and beta > 0.
    if (f.alpha <= 0 || f.beta <= 0) {
      rep.failures.push_back({w, "(a) alpha > 0 and beta > 0 fails"});
      return;
    }
    if (f.alpha <= (w[0] - 1) * f.beta)
      rep.failures.push_back({w, "(a) value > m_1 - 1 fails"});
    const bool hyp_b = k >= 2 && (w[k - 2] * w[k - 1] > 0 || mag(w[k - 1]) >= 3);
    if (!hyp_b) return;
    if (f.alpha < 2 || f.beta < 2)
      rep.failures.push_back({w, "(b) alpha >= 2 and beta >= 2 fails"});
    const bool hyp_c = w[0] >= 2 && (k < 2 || w[0] * w[1] > 0 || w[0] >= 3);
    if (!hyp_c) return;
    if (f.alpha <= 2 * f.beta) rep.failures.push_back({w, "(c) value > 2 fails"});
    const bool hyp_d = k >= 3 && (mag(w[1]) != 1 || w[1] * w[2] > 0);
    if (!hyp_d) return;
    if (f.beta >= 2 && f.alpha % f.beta == 1)
      rep.failures.push_back({w, "(d) alpha != 1 (mod beta) fails"});
  });
  rep.sort_entries();
  rep.elapsed_ms = watch.ms();
  return rep;
}

// Soundness of every emitted instance on seeded random words: the link class
// is preserved exactly, crossings and complexity never increase, and the
// word never lengthens.
inline VerifyReport check_move_soundness(std::int64_t trials, std::uint64_t seed) {
  detail::Stopwatch watch;
  VerifyReport rep;
  rep.harness = "moves";
  rep.bounds = {{"trials", trials}, {"max_length", 7}, {"entry_bound", 5}};
  rep.seed = seed;
  SplitMix64 rng{seed};
  for (std::int64_t t = 0; t < trials; ++t) {
    Word w(rng.below(8));
    for (auto& m : w) m = static_cast<std::int64_t>(rng.below(11)) - 5;
    ++rep.tested;
    const LinkClass cls = link_class(w);
    for (const MoveInstance& inst : enumerate_moves(w)) {
      Word r;
      try {
        r = apply_move(w, inst);
      } catch (const std::exception& e) {
        rep.failures.push_back({w, std::string("apply failed: ") + e.what()});
        continue;
      }
      const std::string tag = std::string(rule_name(inst.rule)) + "@" + std::to_string(inst.start);
      if (link_class(r) != cls) rep.failures.push_back({w, tag + " changed the link class"});
      if (crossing_count(r) > crossing_count(w))
        rep.failures.push_back({w, tag + " increased crossings"});
      if (complexity(r) > complexity(w))
        rep.failures.push_back({w, tag + " increased complexity"});
      if (r.size() > w.size()) rep.failures.push_back({w, tag + " lengthened the word"});
    }
  }
  rep.sort_entries();
  rep.elapsed_ms = watch.ms();
  return rep;
}

// Generator sweep over all-positive words with k in [3, max_length],
// entries <= entry_bound, ends >= 2: awkward outputs must be class-equal,
// non-alternating and catalog-simple; hard outputs class-equal and hard.
inline VerifyReport check_generators(const EnumBounds& b, const SearchLimits& limits = {}) {
  detail::Stopwatch watch;
  VerifyReport rep;
  rep.harness = "gen";
  rep.bounds = bounds_to_json(b);
  Word cur;
  const std::function<void(std::int64_t)> rec = [&](std::int64_t k) {
    if (k == 0) {
      if (cur.back() < 2) return;
      ++rep.tested;
      const Word awk = awkward_diagram(cur);
      if (!same_link(cur, awk)) rep.failures.push_back({cur, "awkward output changed class"});
      if (is_alternating(awk)) rep.failures.push_back({cur, "awkward output is alternating"});
      switch (is_catalog_simple(awk, limits)) {
        case SimpleVerdict::Simple: break;
        case SimpleVerdict::NotSimple:
          rep.failures.push_back({cur, "awkward output " + format_word(awk) + " is reducible"});
          break;
        case SimpleVerdict::Unknown:
          rep.failures.push_back({cur, "budget exhausted on awkward output"});
          break;
      }
      const Word hard = hard_diagram(cur);
      if (!same_link(cur, hard)) rep.failures.push_back({cur, "hard output changed class"});
      if (!is_hard(hard))
        rep.failures.push_back({cur, "hard output " + format_word(hard) + " is not hard"});
      return;
    }
    const std::int64_t lo = cur.empty() ? 2 : 1;
    for (std::int64_t v = lo; v <= b.entry_bound; ++v) {
      cur.push_back(v);
      rec(k - 1);
      cur.pop_back();
    }
  };
  for (std::int64_t k = 3; k <= b.max_length; ++k) rec(k);
  rep.sort_entries();
  rep.elapsed_ms = watch.ms();
  return rep;
}

}  // namespace trigonal

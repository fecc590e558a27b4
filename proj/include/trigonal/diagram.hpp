#pragma once

#include <algorithm>
#include <cctype>
#include <string>

#include "trigonal/contfrac.hpp"

// Diagram words and their link-level classification.
//
// A word D(m1,...,mk) lists twist counts under the alternating sign
// convention (odd rows: right twist positive; even rows: negative).  Two
// words describe the same link exactly when their fractions satisfy
// alpha = alpha' and beta' = beta^{+-1} (mod alpha); LinkClass is that
// equivalence class.  Words may contain zeros transiently; every predicate
// that needs zero-free input returns false on zeros instead of throwing.

namespace trigonal {

inline std::int64_t crossing_count(const Word& w) {
  std::int64_t s = 0;
  for (std::int64_t m : w) s = checked_add(s, m < 0 ? -m : m);
  return s;
}

inline std::int64_t complexity(const Word& w) {
  return checked_add(static_cast<std::int64_t>(w.size()), crossing_count(w));
}

inline bool is_zero_free(const Word& w) {
  return std::none_of(w.begin(), w.end(), [](std::int64_t m) { return m == 0; });
}

// Nonempty, zero-free, all entries of one sign; the empty word counts as
// alternating (trivial diagram).
inline bool is_alternating(const Word& w) {
  if (w.empty()) return true;
  const bool pos = std::all_of(w.begin(), w.end(), [](std::int64_t m) { return m > 0; });
  const bool neg = std::all_of(w.begin(), w.end(), [](std::int64_t m) { return m < 0; });
  return pos || neg;
}

inline Word negated(Word w) {
  for (auto& m : w) m = -m;
  return w;
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Mixed signs, every |mi| >= 2, and at each end either magnitude >= 3 or the
// end pair has a common sign.  Such diagrams admit no crossing-reducing moves.
inline bool is_hard(const Word& w) {
  const std::size_t k = w.size();
  if (k < 2) return false;
  bool has_pos = false, has_neg = false;
  for (std::int64_t m : w) {
    if (m > 0) has_pos = true;
    if (m < 0) has_neg = true;
    if (m > -2 && m < 2) return false;
  }
  if (!has_pos || !has_neg) return false;
  const auto end_ok = [](std::int64_t end, std::int64_t inner) {
    return end >= 3 || end <= -3 || end * inner > 0;
  };
  return end_ok(w[0], w[1]) && end_ok(w[k - 1], w[k - 2]);
}

struct LinkClass {
  std::int64_t alpha = 1;
  std::vector<std::int64_t> residues;  // sorted; empty iff alpha <= 1
  friend bool operator==(const LinkClass&, const LinkClass&) = default;
  friend bool operator<(const LinkClass& a, const LinkClass& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.residues < b.residues;
  }
};

inline LinkClass link_class(const Word& w) {
  const SchubertPair f = eval_word(w);
  if (f.alpha <= 1) return {f.alpha, {}};
  std::int64_t r = f.beta % f.alpha;
  if (r < 0) r += f.alpha;
  const std::int64_t inv = mod_inverse(r, f.alpha);
  if (r == inv) return {f.alpha, {r}};
  return {f.alpha, {std::min(r, inv), std::max(r, inv)}};
}

inline bool same_link(const Word& a, const Word& b) { return link_class(a) == link_class(b); }

// Class of the entrywise-negated word; an involution.
inline LinkClass mirror_class(const LinkClass& c) {
  if (c.alpha <= 1) return c;
  std::vector<std::int64_t> rs;
  rs.reserve(c.residues.size());
  for (std::int64_t r : c.residues) rs.push_back((c.alpha - r) % c.alpha);
  std::sort(rs.begin(), rs.end());
  return {c.alpha, rs};
}

// Canonical all-positive representative: Euclidean expansion of the smallest
// residue.  alpha = 0 (the split two-component class) has none.
inline Word normal_form(const LinkClass& c) {
  if (c.alpha == 0)
    throw std::domain_error("normal_form: trivial two-component class has no normal form");
  if (c.alpha == 1) return {};
  return positive_expansion(c.alpha, c.residues.front());
}

// Torus words C(m) and twist words C(m,n): the classes whose canonical form
// (or its mirror's) has length <= 2.  Classes with alpha <= 1 count as
// trivially reducible.
inline bool is_torus_or_twist(const LinkClass& c) {
  if (c.alpha <= 1) return true;
  if (normal_form(c).size() <= 2) return true;
  return normal_form(mirror_class(c)).size() <= 2;
}

enum class Notation { D, C, Bare };

inline std::string format_word(const Word& w, Notation style = Notation::D) {
  if (style == Notation::C && !w.empty() && !is_alternating(w))
    throw std::invalid_argument("format_word: C notation needs entries of one sign");
  std::string body;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) body += ',';
    body += std::to_string(w[i]);
  }
  switch (style) {
    case Notation::D: return "D(" + body + ")";
    case Notation::C: return "C(" + body + ")";
    default: return body;
  }
}

// Accepts "D(...)", "C(...)" or a bare comma list; whitespace is ignored.
// C notation rejects zeros and mixed signs.
inline Word parse_word(const std::string& text) {
  auto trim = [](const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  };
  const std::string s = trim(text);
  bool cstyle = false, wrapped = false;
  std::string inner = s;
  if (s.size() >= 3 && (s[0] == 'D' || s[0] == 'C') && s[1] == '(' && s.back() == ')') {
    cstyle = s[0] == 'C';
    wrapped = true;
    inner = trim(s.substr(2, s.size() - 3));
  }
  Word out;
  if (inner.empty()) {
    if (wrapped) return out;
    throw std::invalid_argument("parse_word: empty input");
  }
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    const std::string tok = trim(inner.substr(pos, comma - pos));
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_word: malformed entry '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("parse_word: malformed entry '" + tok + "'");
    out.push_back(v);
    pos = comma + 1;
    if (comma == inner.size()) break;
  }
  if (cstyle && !out.empty() && (!is_zero_free(out) || !is_alternating(out)))
    throw std::invalid_argument("parse_word: C notation needs entries of one sign");
  return out;
}

// Total order used wherever a deterministic representative is needed.
inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace trigonal

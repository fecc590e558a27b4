#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

// Exact integer continued fraction arithmetic.
//
// A word [m1,...,mk] denotes the nested fraction m1 + 1/(m2 + 1/(... + 1/mk)).
// Evaluation goes through 2x2 continuant matrices [[m,1],[1,0]], so it stays
// total for words containing zeros, where the nested form would divide by
// zero.  All arithmetic is overflow-checked: results are exact or an
// std::overflow_error is thrown, never silently wrapped.

namespace trigonal {

using Word = std::vector<std::int64_t>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in continuant arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in continuant arithmetic");
  return r;
}

struct SchubertPair {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  friend bool operator==(const SchubertPair&, const SchubertPair&) = default;
};

// First column of the left-to-right product of [[mi,1],[1,0]], sign-normalised
// so alpha >= 0; the degenerate (0, +-1) collapses to (0, 1).  The product has
// determinant +-1, so gcd(alpha, beta) = 1 holds without explicit reduction.
inline SchubertPair eval_word(const Word& word) {
  std::int64_t a = 1, b = 0;  // matrix [[a,b],[c,d]], first column (a, c)
  std::int64_t c = 0, d = 1;
  for (std::int64_t m : word) {
    const std::int64_t a2 = checked_add(checked_mul(a, m), b);
    const std::int64_t c2 = checked_add(checked_mul(c, m), d);
    b = a;
    d = c;
    a = a2;
    c = c2;
  }
  if (a < 0 || (a == 0 && c < 0)) {
    a = -a;
    c = -c;
  }
  if (a == 0) c = 1;
  return {a, c};
}

// Euclidean expansion of alpha/beta into the unique all-positive word with
// last entry >= 2 (empty for alpha = 1).
inline Word positive_expansion(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 1 || beta < 1 || beta > alpha || std::gcd(alpha, beta) != 1)
    throw std::invalid_argument(
        "positive_expansion: need 1 <= beta <= alpha with gcd(alpha, beta) = 1");
  Word out;
  if (alpha == 1) return out;
  std::int64_t a = alpha, b = beta;
  while (b != 0) {
    out.push_back(a / b);
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return out;
}

// Unique x in [1, a-1] with b*x = 1 (mod a); b may be any representative of
// its residue class.
inline std::int64_t mod_inverse(std::int64_t b, std::int64_t a) {
  if (a < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  std::int64_t r = b % a;
  if (r < 0) r += a;
  std::int64_t r0 = a, r1 = r;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    const std::int64_t r2 = r0 - q * r1;
    const std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: value is not invertible");
  if (t0 < 0) t0 += a;
  return t0;
}

// Word of value (a*z+1)/((a-1)*z+1): a-1 alternating entries of magnitude 2
// starting at +2, then (-1)^(a-1) * (z+1).
inline Word staircase(std::int64_t a, std::int64_t z) {
  if (a < 1 || z < 1) throw std::invalid_argument("staircase: need a >= 1 and z >= 1");
  Word out;
  for (std::int64_t i = 0; i + 1 < a; ++i) out.push_back(i % 2 == 0 ? 2 : -2);
  out.push_back((a % 2 == 1 ? 1 : -1) * checked_add(z, 1));
  return out;
}

}  // namespace trigonal

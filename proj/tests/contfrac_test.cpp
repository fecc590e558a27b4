#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "trigonal/contfrac.hpp"
#include "trigonal/generators.hpp"

using namespace trigonal;

TEST_CASE("eval_word on pinned words") {
  CHECK(eval_word({5}) == SchubertPair{5, 1});
  CHECK(eval_word({2, 1, -1, -2}) == SchubertPair{5, 1});
  CHECK(eval_word({3, 1, 2}) == SchubertPair{11, 3});
  CHECK(eval_word({2, 0, 3}) == SchubertPair{5, 1});  // nested form hits 1/0
  CHECK(eval_word({}) == SchubertPair{1, 0});
  CHECK(eval_word({0}) == SchubertPair{0, 1});
  CHECK(eval_word({1, -1}) == SchubertPair{0, 1});
  CHECK(eval_word({4, -3}) == SchubertPair{11, 3});
  CHECK(eval_word({-1, -1, -1, 1, 1, 1}) == SchubertPair{5, -4});
}

TEST_CASE("eval_word agrees with exact nested evaluation") {
  // Exhaustive to length 4, sampled beyond, entries in [-6, 6].
  Word w;
  std::int64_t checked = 0;
  const std::function<void(int)> rec = [&](int k) {
    if (const auto r = oracle::eval_nested(w)) {
      ++checked;
      REQUIRE(oracle::matches(eval_word(w), *r));
    }
    if (k == 0) return;
    for (std::int64_t m = -6; m <= 6; ++m) {
      w.push_back(m);
      rec(k - 1);
      w.pop_back();
    }
  };
  rec(4);
  CHECK(checked > 20000);

  SplitMix64 rng{2024};
  for (int t = 0; t < 5000; ++t) {
    Word u(5 + rng.below(4));
    for (auto& m : u) m = static_cast<std::int64_t>(rng.below(13)) - 6;
    if (const auto r = oracle::eval_nested(u)) REQUIRE(oracle::matches(eval_word(u), *r));
  }
}

TEST_CASE("eval_word output is coprime and sign-normalised") {
  SplitMix64 rng{7};
  for (int t = 0; t < 2000; ++t) {
    Word u(rng.below(8));
    for (auto& m : u) m = static_cast<std::int64_t>(rng.below(13)) - 6;
    const auto [alpha, beta] = eval_word(u);
    REQUIRE(alpha >= 0);
    if (alpha == 0) REQUIRE(beta == 1);
    if (alpha > 0) REQUIRE(std::gcd(alpha, beta < 0 ? -beta : beta) == 1);
  }
}

TEST_CASE("positive_expansion pinned values") {
  CHECK(positive_expansion(5, 1) == Word{5});
  CHECK(positive_expansion(11, 3) == Word{3, 1, 2});
  CHECK(positive_expansion(5, 2) == Word{2, 2});
  CHECK(positive_expansion(1, 1) == Word{});
  CHECK_THROWS_AS(positive_expansion(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(positive_expansion(5, 7), std::invalid_argument);
  CHECK_THROWS_AS(positive_expansion(0, 1), std::invalid_argument);
}

TEST_CASE("positive_expansion round-trips through eval_word") {
  for (std::int64_t alpha = 2; alpha <= 500; ++alpha)
    for (std::int64_t beta = 1; beta < alpha; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      const Word w = positive_expansion(alpha, beta);
      REQUIRE(eval_word(w) == SchubertPair{alpha, beta});
      REQUIRE(w.front() >= 1);
      for (std::int64_t m : w) REQUIRE(m >= 1);
      REQUIRE(w.back() >= 2);
    }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 11) == 4);
  CHECK(mod_inverse(1, 5) == 1);
  CHECK(mod_inverse(-4, 5) == 1);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
  for (std::int64_t a = 2; a <= 500; ++a)
    for (std::int64_t b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const std::int64_t x = mod_inverse(b, a);
      REQUIRE(x >= 1);
      REQUIRE(x < a);
      REQUIRE((b * x) % a == 1);
      REQUIRE(mod_inverse(x, a) == b);
    }
}

TEST_CASE("staircase identity") {
  CHECK(staircase(1, 4) == Word{5});
  CHECK(staircase(2, 2) == Word{2, -3});
  CHECK(staircase(3, 1) == Word{2, -2, 2});
  CHECK(eval_word(staircase(2, 2)) == SchubertPair{5, 3});
  CHECK(eval_word(staircase(3, 1)) == SchubertPair{4, 3});
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t z = 1; z <= 6; ++z)
      REQUIRE(eval_word(staircase(a, z)) == SchubertPair{a * z + 1, (a - 1) * z + 1});
}

TEST_CASE("checked arithmetic refuses to wrap") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 4), std::overflow_error);
  CHECK_THROWS_AS(eval_word(Word(41, 1000000)), std::overflow_error);
}

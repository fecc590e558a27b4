#include <catch2/catch.hpp>

#include "trigonal/diagram.hpp"
#include "trigonal/generators.hpp"

using namespace trigonal;

TEST_CASE("complexity and crossing count") {
  CHECK(complexity({}) == 0);
  CHECK(complexity({4, -3}) == 9);
  CHECK(complexity({5}) == 6);
  CHECK(crossing_count({}) == 0);
  CHECK(crossing_count({2, 1, -1, -2}) == 6);
  CHECK(crossing_count({4, -3}) == 7);
}

TEST_CASE("is_alternating") {
  CHECK(is_alternating({5}));
  CHECK(is_alternating({}));
  CHECK(is_alternating({-2, -1, -4}));
  CHECK_FALSE(is_alternating({4, -3}));
  CHECK_FALSE(is_alternating({2, 0, 3}));
}

TEST_CASE("link_class on pinned words") {
  CHECK(link_class({5}) == LinkClass{5, {1}});
  CHECK(link_class({-1, -1, -1, 1, 1, 1}) == LinkClass{5, {1}});
  CHECK(link_class({3}) == LinkClass{3, {1}});
  CHECK(link_class({1, 1, 1}) == LinkClass{3, {2}});
  CHECK(link_class({4, -3}) == LinkClass{11, {3, 4}});
  CHECK(link_class({}) == LinkClass{1, {}});
  CHECK(link_class({1, -1}) == LinkClass{0, {}});
}

TEST_CASE("same_link") {
  CHECK(same_link({4, -3}, {3, 1, 2}));
  CHECK(same_link({2, 2, -1, 2, 2}, {5}));
  CHECK_FALSE(same_link({3}, {1, 1, 1}));
}

TEST_CASE("mirror_class is an involution matching word negation") {
  CHECK(mirror_class({3, {1}}) == LinkClass{3, {2}});
  CHECK(mirror_class({5, {1}}) == LinkClass{5, {4}});
  CHECK(mirror_class({1, {}}) == LinkClass{1, {}});
  SplitMix64 rng{11};
  for (int t = 0; t < 3000; ++t) {
    Word w(1 + rng.below(7));
    for (auto& m : w) m = static_cast<std::int64_t>(rng.below(10)) - 5;
    if (!is_zero_free(w)) continue;
    const LinkClass c = link_class(w);
    REQUIRE(mirror_class(mirror_class(c)) == c);
    REQUIRE(link_class(negated(w)) == mirror_class(c));
  }
}

TEST_CASE("normal_form") {
  CHECK(normal_form({11, {3, 4}}) == Word{3, 1, 2});
  CHECK(normal_form({5, {2, 3}}) == Word{2, 2});
  CHECK(normal_form({1, {}}) == Word{});
  CHECK_THROWS_AS(normal_form({0, {}}), std::domain_error);
  for (std::int64_t alpha = 2; alpha <= 120; ++alpha)
    for (std::int64_t beta = 1; beta < alpha; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      const LinkClass c = link_class(positive_expansion(alpha, beta));
      const Word nf = normal_form(c);
      REQUIRE(is_alternating(nf));
      if (nf.size() > 1) REQUIRE(nf.back() >= 2);
      const LinkClass back = link_class(nf);
      REQUIRE(back.alpha == c.alpha);
      for (std::int64_t r : back.residues)
        REQUIRE(std::find(c.residues.begin(), c.residues.end(), r) != c.residues.end());
    }
}

TEST_CASE("hard predicate") {
  CHECK(is_hard({4, -3}));
  CHECK(is_hard({3, -2, 3}));
  CHECK_FALSE(is_hard({5}));
  CHECK_FALSE(is_hard({2, -1, 2}));
  CHECK_FALSE(is_hard({2, -2}));     // |end| = 2 with opposite-sign neighbour
  CHECK_FALSE(is_hard({2, -3, 4}));  // left end fails the same way
  CHECK(is_hard({2, 2, -2, 3}));
}

TEST_CASE("torus and twist classes") {
  CHECK(is_torus_or_twist({5, {1}}));
  CHECK(is_torus_or_twist({5, {2, 3}}));
  CHECK_FALSE(is_torus_or_twist({11, {3, 4}}));
  CHECK(is_torus_or_twist({1, {}}));
  CHECK(is_torus_or_twist({0, {}}));
  CHECK(is_torus_or_twist(link_class({-1, -4})));  // mirror of a torus word
}

TEST_CASE("parse and format") {
  CHECK(parse_word("D(4,-3)") == Word{4, -3});
  CHECK(parse_word("C(3,1,2)") == Word{3, 1, 2});
  CHECK(parse_word("D(2, 0, 3)") == Word{2, 0, 3});
  CHECK(parse_word("2,1,-1,-2") == Word{2, 1, -1, -2});
  CHECK(parse_word("D()") == Word{});
  CHECK(format_word({4, -3}) == "D(4,-3)");
  CHECK(format_word({3, 1, 2}, Notation::C) == "C(3,1,2)");
  CHECK(format_word({}, Notation::D) == "D()");
  CHECK_THROWS_AS(parse_word("C(3,-1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("D(2,,3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("D(2,x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
  CHECK_THROWS_AS(format_word({4, -3}, Notation::C), std::invalid_argument);

  SplitMix64 rng{23};
  for (int t = 0; t < 2000; ++t) {
    Word w(rng.below(6));
    for (auto& m : w) m = static_cast<std::int64_t>(rng.below(21)) - 10;
    REQUIRE(parse_word(format_word(w)) == w);
    REQUIRE(parse_word(format_word(w, Notation::Bare).empty() ? "D()"
                                                              : format_word(w, Notation::Bare)) == w);
  }
}

#include <doctest.h>

#include <random>

#include "rtc/burau.hpp"
#include "rtc/order.hpp"
#include "support.hpp"

using namespace rtc;
using rtc::testing::equivalent_rewrite;
using rtc::testing::random_word;

TEST_CASE("handle_reduce basics") {
  CHECK(handle_reduce(BraidWord(3)) == BraidWord(3));
  CHECK(handle_reduce(BraidWord(2, {{1, 1}, {1, -1}})).empty());

  // s1 s2 s1^-1 has a sigma_1 handle; the reduced word is Burau-equal.
  BraidWord w(3, {{1, 1}, {2, 1}, {1, -1}});
  BraidWord r = handle_reduce(w);
  CHECK(burau(r) == burau(w));
  // no letter of index 1 remains visible as a handle pair
  CHECK(r == BraidWord(3, {{2, -1}, {1, 1}, {2, 1}}));
}

TEST_CASE("handle_reduce preserves the Burau matrix") {
  std::mt19937 rng(83);
  for (int strands : {3, 4}) {
    for (int i = 0; i < 40; ++i) {
      BraidWord a = random_word(rng, strands, 14);
      CHECK(burau(handle_reduce(a)) == burau(a));
    }
  }
}

TEST_CASE("compare basics") {
  CHECK(compare(BraidWord(2), BraidWord(2, {{1, 1}})) == ComparisonResult::Less);
  CHECK(compare(BraidWord(3, {{1, 1}, {2, 1}, {1, 1}}),
                BraidWord(3, {{2, 1}, {1, 1}, {2, 1}})) == ComparisonResult::Equal);
  CHECK(compare(BraidWord(2, {{1, 1}}), BraidWord(2, {{1, 1}, {1, 1}})) ==
        ComparisonResult::Less);
  CHECK_THROWS_AS(compare(BraidWord(2), BraidWord(3)), InputError);
}

TEST_CASE("compare agrees with Burau faithfulness in B_3") {
  std::mt19937 rng(89);
  int equal_seen = 0;
  for (int i = 0; i < 150; ++i) {
    BraidWord a = random_word(rng, 3, 10);
    BraidWord b = (i % 3 == 0) ? equivalent_rewrite(rng, a) : random_word(rng, 3, 10);
    const bool burau_equal = burau(a) == burau(b);
    const bool order_equal = compare(a, b) == ComparisonResult::Equal;
    CHECK(burau_equal == order_equal);
    if (order_equal) ++equal_seen;
  }
  CHECK(equal_seen > 10);  // the rewrite arm must actually exercise Equal
}

TEST_CASE("order axioms on random words") {
  std::mt19937 rng(97);
  SUBCASE("left invariance") {
    for (int i = 0; i < 60; ++i) {
      BraidWord a = random_word(rng, 3, 8), b = random_word(rng, 3, 8);
      BraidWord c = random_word(rng, 3, 8);
      CHECK(compare(compose(c, a), compose(c, b)) == compare(a, b));
    }
  }
  SUBCASE("antisymmetry") {
    for (int i = 0; i < 60; ++i) {
      BraidWord a = random_word(rng, 3, 8), b = random_word(rng, 3, 8);
      auto ab = compare(a, b), ba = compare(b, a);
      if (ab == ComparisonResult::Less) CHECK(ba == ComparisonResult::Greater);
      if (ab == ComparisonResult::Equal) CHECK(ba == ComparisonResult::Equal);
      if (ab == ComparisonResult::Greater) CHECK(ba == ComparisonResult::Less);
    }
  }
  SUBCASE("transitivity") {
    for (int i = 0; i < 60; ++i) {
      std::vector<BraidWord> w = {random_word(rng, 3, 8), random_word(rng, 3, 8),
                                  random_word(rng, 3, 8)};
      auto le = [](const BraidWord& x, const BraidWord& y) {
        return compare(x, y) != ComparisonResult::Greater;
      };
      if (le(w[0], w[1]) && le(w[1], w[2])) CHECK(le(w[0], w[2]));
    }
  }
}

TEST_CASE("is_trivial") {
  CHECK(is_trivial(BraidWord(3)));
  CHECK_FALSE(is_trivial(BraidWord(2, {{1, 1}})));
  // [s1 s2 s1][s2 s1 s2]^-1
  BraidWord lhs(3, {{1, 1}, {2, 1}, {1, 1}});
  BraidWord rhs(3, {{2, 1}, {1, 1}, {2, 1}});
  CHECK(is_trivial(compose(lhs, inverse(rhs))));
}

TEST_CASE("sort_braids") {
  BraidWord id2(2), s1(2, {{1, 1}});
  auto sorted = sort_braids({s1, id2});
  CHECK(sorted[0].empty());
  CHECK(sorted[1] == include(s1, 2));

  CHECK(sort_braids({s1}) == std::vector<BraidWord>{s1});

  SUBCASE("sorted list is an ordered permutation of the input") {
    std::mt19937 rng(101);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<BraidWord> in;
      for (int i = 0; i < 8; ++i) in.push_back(random_word(rng, 3, 6));
      in.push_back(random_word(rng, 4, 6));  // mixed strand counts
      auto out = sort_braids(in);
      CHECK(out.size() == in.size());
      for (std::size_t i = 0; i + 1 < out.size(); ++i)
        CHECK(compare(out[i], out[i + 1]) != ComparisonResult::Greater);
    }
  }
}

#include <doctest.h>

#include <random>

#include "rtc/invariants.hpp"
#include "rtc/order.hpp"
#include "support.hpp"

using namespace rtc;
using rtc::testing::random_word;

namespace {

IndexSequence seq(std::vector<long> terms) {
  IndexSequence s;
  for (long t : terms) s.terms.push_back(t);
  return s;
}

mpq_class value(const Convergents& c, std::size_t i) {
  return mpq_class(c.numerators[i], c.denominators[i]);
}

}  // namespace

TEST_CASE("continued_fraction small cases") {
  Convergents single = continued_fraction(seq({5}));
  CHECK(single.numerators == std::vector<mpz_class>{5});
  CHECK(single.denominators == std::vector<mpz_class>{1});

  Convergents fib = continued_fraction(seq({1, 1, 1, 1, 1}));
  CHECK(fib.numerators == std::vector<mpz_class>{1, 2, 3, 5, 8});
  CHECK(fib.denominators == std::vector<mpz_class>{1, 1, 2, 3, 5});

  Convergents c = continued_fraction(seq({1, 2, 3}));
  CHECK(c.numerators == std::vector<mpz_class>{1, 3, 10});
  CHECK(c.denominators == std::vector<mpz_class>{1, 2, 7});

  CHECK_THROWS_AS(continued_fraction(seq({})), InputError);
  CHECK_THROWS_AS(continued_fraction(seq({1, 0, 2})), InputError);
}

TEST_CASE("convergent recurrence, coprimality and alternation") {
  std::mt19937 rng(107);
  std::uniform_int_distribution<long> term(1, 30);
  std::uniform_int_distribution<int> len(2, 12);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<long> terms;
    for (int i = 0, n = len(rng); i < n; ++i) terms.push_back(term(rng));
    IndexSequence s = seq(terms);
    Convergents c = continued_fraction(s);
    for (std::size_t i = 2; i < c.numerators.size(); ++i) {
      CHECK(c.numerators[i] ==
            s.terms[i] * c.numerators[i - 1] + c.numerators[i - 2]);
      CHECK(c.denominators[i] ==
            s.terms[i] * c.denominators[i - 1] + c.denominators[i - 2]);
    }
    for (std::size_t i = 0; i < c.numerators.size(); ++i) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), c.numerators[i].get_mpz_t(),
              c.denominators[i].get_mpz_t());
      CHECK(g == 1);
    }
    // |v_d - v_{d+1}| strictly decreasing
    for (std::size_t i = 0; i + 2 < c.numerators.size(); ++i) {
      mpq_class d1 = abs(value(c, i) - value(c, i + 1));
      mpq_class d2 = abs(value(c, i + 1) - value(c, i + 2));
      CHECK(d2 < d1);
    }
  }
}

TEST_CASE("padic_expand") {
  PadicDigits d = padic_expand(seq({1, 2, 3}), 2);
  CHECK(d.digits == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(d.partial_sum == 5);

  PadicDigits zero = padic_expand(seq({7, 7, 7}), 7);
  CHECK(zero.digits == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(zero.partial_sum == 0);

  PadicDigits one = padic_expand(seq({1}), 3);
  CHECK(one.digits == std::vector<std::uint64_t>{1});
  CHECK(one.partial_sum == 1);

  CHECK_THROWS_AS(padic_expand(seq({1, 2}), 4), InputError);

  SUBCASE("partial sums satisfy the congruence chain") {
    std::mt19937 rng(109);
    std::uniform_int_distribution<long> term(1, 50);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      std::vector<long> terms;
      for (int i = 0; i < 10; ++i) terms.push_back(term(rng));
      mpz_class power = 1;
      for (int d = 1; d <= 10; ++d) {
        power *= p;  // p^d
        PadicDigits a = padic_expand(seq({terms.begin(), terms.begin() + d}), p);
        if (d < 10) {
          PadicDigits b =
              padic_expand(seq({terms.begin(), terms.begin() + d + 1}), p);
          CHECK((b.partial_sum - a.partial_sum) % power == 0);
        }
      }
    }
  }
}

TEST_CASE("trace_invariant") {
  std::vector<std::complex<double>> t1 =
      trace_invariant({BraidWord(3)}, {0.0, 1.0});
  CHECK(t1 == std::vector<std::complex<double>>{{3.0, 0.0}});

  std::vector<std::complex<double>> t2 =
      trace_invariant({BraidWord(3, {{1, 1}})}, {-1.0, 0.0});
  CHECK(t2[0] == std::complex<double>(3.0, 0.0));

  // exact multiplication oracle: burau(s1^2) block trace at t=-1
  std::vector<std::complex<double>> t3 = trace_invariant(
      {BraidWord(3, {{1, 1}}), BraidWord(3, {{1, 1}, {1, 1}})}, {-1.0, 0.0});
  IntMatrix sq = symplectic(BraidWord(3, {{1, 1}, {1, 1}}));
  mpz_class tr = sq.at(0, 0) + sq.at(1, 1) + sq.at(2, 2);
  CHECK(t3[1].real() == doctest::Approx(tr.get_d()));

  CHECK_THROWS_AS(trace_invariant({BraidWord(2)}, {0.0, 0.0}), InputError);
}

TEST_CASE("route_index_sequence") {
  BraidWord id2(2), s1(2, {{1, 1}}), s1s1(2, {{1, 1}, {1, 1}});

  SUBCASE("single sorted cascade passes through") {
    CascadeIndices c{"c0", {{id2, 3}, {s1, 5}, {s1s1, 7}}};
    IndexSequence out = route_index_sequence({c});
    CHECK(out.terms == std::vector<mpz_class>{3, 5, 7});
  }

  SUBCASE("merged order follows the braid order, not cascade order") {
    CascadeIndices c1{"c1", {{id2, 10}, {s1s1, 30}}};
    CascadeIndices c2{"c2", {{s1, 20}}};
    IndexSequence out = route_index_sequence({c1, c2});
    CHECK(out.terms == std::vector<mpz_class>{10, 20, 30});

    // invariant under permuting the cascade list
    IndexSequence flipped = route_index_sequence({c2, c1});
    CHECK(flipped.terms == out.terms);
  }

  SUBCASE("pairwise compare oracle on random input") {
    std::mt19937 rng(113);
    std::vector<CascadeIndices> cascades(2);
    std::vector<std::pair<BraidWord, mpz_class>> all;
    for (int i = 0; i < 10; ++i) {
      BraidWord w = random_word(rng, 3, 6);
      cascades[i % 2].entries.push_back({w, i});
      all.push_back({w, i});
    }
    IndexSequence out = route_index_sequence(cascades);
    // every adjacent pair in output must be non-Greater in braid order
    // (checked indirectly: output is a permutation of the inputs' c values)
    std::vector<mpz_class> sorted_terms = out.terms;
    std::sort(sorted_terms.begin(), sorted_terms.end());
    std::vector<mpz_class> expect;
    for (int i = 0; i < 10; ++i) expect.push_back(i);
    CHECK(sorted_terms == expect);
  }

  CHECK_THROWS_AS(route_index_sequence({}), InputError);
}

#include <doctest.h>

#include <random>

#include "rtc/burau.hpp"
#include "support.hpp"

using namespace rtc;
using rtc::testing::random_word;

namespace {

LaurentPoly t_pow(long k) { return LaurentPoly::term(1, k); }

}  // namespace

TEST_CASE("burau generators match the explicit 3x3 matrices") {
  LaurentMatrix g1 = burau_generator(3, 1, 1);
  CHECK(g1.at(0, 0) == LaurentPoly(1) - t_pow(1));
  CHECK(g1.at(0, 1) == t_pow(1));
  CHECK(g1.at(0, 2) == LaurentPoly());
  CHECK(g1.at(1, 0) == LaurentPoly(1));
  CHECK(g1.at(1, 1) == LaurentPoly());
  CHECK(g1.at(2, 2) == LaurentPoly(1));

  LaurentMatrix g2 = burau_generator(3, 2, 1);
  CHECK(g2.at(0, 0) == LaurentPoly(1));
  CHECK(g2.at(1, 1) == LaurentPoly(1) - t_pow(1));
  CHECK(g2.at(1, 2) == t_pow(1));
  CHECK(g2.at(2, 1) == LaurentPoly(1));
  CHECK(g2.at(2, 2) == LaurentPoly());

  for (int i : {1, 2})
    CHECK(burau_generator(3, i, 1) * burau_generator(3, i, -1) ==
          LaurentMatrix::identity(3));
  CHECK_THROWS_AS(burau_generator(3, 3, 1), InputError);
}

TEST_CASE("burau word image") {
  CHECK(burau(BraidWord(3)) == LaurentMatrix::identity(3));

  // braid relation
  CHECK(burau(BraidWord(3, {{1, 1}, {2, 1}, {1, 1}})) ==
        burau(BraidWord(3, {{2, 1}, {1, 1}, {2, 1}})));

  // sigma_1^-1 sigma_2 = product of inverse and forward displays
  CHECK(burau(BraidWord(3, {{1, -1}, {2, 1}})) ==
        burau_generator(3, 1, -1) * burau_generator(3, 2, 1));

  SUBCASE("homomorphism on random words") {
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
      BraidWord a = random_word(rng, 4, 10), b = random_word(rng, 4, 10);
      CHECK(burau(compose(a, b)) == burau(a) * burau(b));
      CHECK(burau(a) * burau(inverse(a)) == LaurentMatrix::identity(4));
    }
  }
}

TEST_CASE("det_laurent") {
  CHECK(det_laurent(LaurentMatrix::identity(3)) == LaurentPoly(1));
  for (int n : {2, 3, 5})
    for (int i = 1; i < n; ++i)
      CHECK(det_laurent(burau_generator(n, i, 1)) == -t_pow(1));

  SUBCASE("det(burau(a)) = (-t)^exponent_sum(a)") {
    std::mt19937 rng(37);
    for (int i = 0; i < 50; ++i) {
      BraidWord a = random_word(rng, 4, 12);
      const long e = static_cast<long>(exponent_sum(a));
      LaurentPoly expected =
          (e % 2 == 0 ? LaurentPoly(1) : LaurentPoly(-1)) * t_pow(e);
      CHECK(det_laurent(burau(a)) == expected);
    }
  }
}

TEST_CASE("evaluate and trace_at") {
  LaurentMatrix id3 = LaurentMatrix::identity(3);
  auto e = evaluate(id3, {0.5, 0.25});
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(e[r][c] - std::complex<double>(r == c ? 1.0 : 0.0)) < 1e-15);

  auto m = evaluate(burau(BraidWord(3, {{1, 1}})), {-1.0, 0.0});
  CHECK(m[0][0].real() == doctest::Approx(2.0));
  CHECK(m[0][1].real() == doctest::Approx(-1.0));
  CHECK(m[1][0].real() == doctest::Approx(1.0));
  CHECK(m[2][2].real() == doctest::Approx(1.0));

  SUBCASE("row sums at t=1 are all 1") {
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i) {
      auto ev = evaluate(burau(random_word(rng, 4, 10)), {1.0, 0.0});
      for (const auto& row : ev) {
        std::complex<double> s{};
        for (const auto& v : row) s += v;
        CHECK(std::abs(s - 1.0) < 1e-9);
      }
    }
  }

  CHECK(trace_at(BraidWord(3), {0.0, 1.0}) == std::complex<double>(3.0, 0.0));
  CHECK(trace_at(BraidWord(3, {{1, 1}}), {-1.0, 0.0}) ==
        std::complex<double>(3.0, 0.0));
  CHECK_THROWS_AS(trace_at(BraidWord(3), {0.0, 0.0}), InputError);

  SUBCASE("evaluate commutes with matrix product on the unit circle") {
    std::mt19937 rng(43);
    const std::complex<double> t0(std::cos(1.1), std::sin(1.1));
    for (int i = 0; i < 10; ++i) {
      LaurentMatrix a = burau(random_word(rng, 4, 8));
      LaurentMatrix b = burau(random_word(rng, 4, 8));
      auto lhs = evaluate(a * b, t0);
      auto ea = evaluate(a, t0), eb = evaluate(b, t0);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          std::complex<double> s{};
          for (int k = 0; k < 4; ++k) s += ea[r][k] * eb[k][c];
          CHECK(std::abs(lhs[r][c] - s) <=
                1e-10 * std::max(1.0, std::abs(s)));
        }
    }
  }
}

TEST_CASE("symplectic specialization") {
  CHECK(symplectic(BraidWord(3)) == IntMatrix::identity(3));

  IntMatrix s = symplectic(BraidWord(2, {{1, 1}}));
  CHECK(s.at(0, 0) == 2);
  CHECK(s.at(0, 1) == -1);
  CHECK(s.at(1, 0) == 1);
  CHECK(s.at(1, 1) == 0);

  SUBCASE("det 1 and row sums 1 on random words") {
    std::mt19937 rng(47);
    for (int i = 0; i < 60; ++i) {
      BraidWord a = random_word(rng, 5, 14);
      IntMatrix m = symplectic(a);
      CHECK(det_int(m) == 1);
      for (int r = 0; r < m.size(); ++r) {
        mpz_class sum = 0;
        for (int c = 0; c < m.size(); ++c) sum += m.at(r, c);
        CHECK(sum == 1);
      }
      // agrees with evaluating the symbolic matrix at t = -1
      LaurentMatrix lb = burau(a);
      for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c)
          CHECK(lb.at(r, c).evaluate_int(-1) == m.at(r, c));
    }
  }
}

TEST_CASE("spectral_log certificate") {
  CHECK(spectral_log(BraidWord(3)) == 0.0);
  CHECK(spectral_log(BraidWord(2, {{1, 1}})) == 0.0);  // double eigenvalue 1
  // char poly of symplectic(s1 s2^-1) is (l-1)(l^2-3l+1)
  const double expected = std::log((3.0 + std::sqrt(5.0)) / 2.0);
  CHECK(spectral_log(BraidWord(3, {{1, 1}, {2, -1}})) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("laurent matrix json round trip") {
  std::mt19937 rng(53);
  for (int i = 0; i < 20; ++i) {
    LaurentMatrix m = burau(random_word(rng, 4, 10));
    CHECK(laurent_matrix_from_json(laurent_matrix_to_json(m)) == m);
  }
}

TEST_CASE("laurent division guards") {
  LaurentPoly a = (LaurentPoly(1) - t_pow(1)) * (LaurentPoly(2) + t_pow(-1));
  CHECK(a.divide_exact(LaurentPoly(1) - t_pow(1)) == LaurentPoly(2) + t_pow(-1));
  CHECK_THROWS_AS((LaurentPoly(1) + t_pow(1)).divide_exact(LaurentPoly(2)),
                  ConsistencyError);
}

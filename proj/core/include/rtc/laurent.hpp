#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rtc/errors.hpp"

namespace rtc {

/// Integer-coefficient Laurent polynomial in t, exact arithmetic.
/// Invariant: no stored zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) coeffs_[0] = c; }  // NOLINT(implicit)
  explicit LaurentPoly(const mpz_class& c) { if (c != 0) coeffs_[0] = c; }

  /// c * t^k
  static LaurentPoly term(const mpz_class& c, long exponent);

  const std::map<long, mpz_class>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  mpz_class coefficient(long exponent) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Exact division; throws ConsistencyError if o does not divide *this.
  LaurentPoly divide_exact(const LaurentPoly& o) const;

  std::complex<double> evaluate(std::complex<double> t0) const;
  mpz_class evaluate_int(long t0) const;  // exact, t0 in {1, -1} mainly

  /// Sorted "c*t^k" rendering, e.g. "1 - 1*t^1" prints as "1 - t".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void prune(long key);
  std::map<long, mpz_class> coeffs_;
};

/// Square matrix of Laurent polynomials.
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int n) : n_(n), entries_(n * n) {
    if (n < 1) throw InputError("LaurentMatrix: size must be >= 1");
  }
  static LaurentMatrix identity(int n);

  int size() const { return n_; }
  const LaurentPoly& at(int r, int c) const { return entries_[r * n_ + c]; }
  LaurentPoly& at(int r, int c) { return entries_[r * n_ + c]; }

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  int n_;
  std::vector<LaurentPoly> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
LaurentPoly det_laurent(const LaurentMatrix& m);

/// JSON schema: array of rows; each entry is a list of [exponent, "coeff"]
/// terms sorted by exponent. Round trip is bit-exact.
nlohmann::ordered_json laurent_matrix_to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j);

}  // namespace rtc

#pragma once

#include <complex>
#include <vector>

#include "rtc/braid.hpp"
#include "rtc/laurent.hpp"

namespace rtc {

/// Square integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), entries_(n * n) {
    if (n < 1) throw InputError("IntMatrix: size must be >= 1");
  }
  static IntMatrix identity(int n);

  int size() const { return n_; }
  const mpz_class& at(int r, int c) const { return entries_[r * n_ + c]; }
  mpz_class& at(int r, int c) { return entries_[r * n_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_;
  std::vector<mpz_class> entries_;
};

mpz_class det_int(const IntMatrix& m);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// Unreduced n x n Burau image of a single generator. sign +1 places the
/// block [[1-t, t],[1, 0]] at rows/cols (i, i+1); sign -1 its exact inverse
/// [[0, 1],[t^-1, 1-t^-1]].
LaurentMatrix burau_generator(int strands, int index, int sign);

/// Ordered product of generator images; identity word -> identity matrix.
LaurentMatrix burau(const BraidWord& a);

/// Entrywise evaluation at a nonzero complex point.
ComplexMatrix evaluate(const LaurentMatrix& m, std::complex<double> t0);

std::complex<double> trace_at(const BraidWord& a, std::complex<double> t0);

/// Burau specialized at t = -1: integer entries, determinant exactly 1.
IntMatrix symplectic(const BraidWord& a);

/// log(max(1, spectral radius of symplectic(a))); entropy lower-bound
/// certificate standing in for pseudo-Anosov classification.
double spectral_log(const BraidWord& a);

double spectral_radius(const IntMatrix& m);

}  // namespace rtc

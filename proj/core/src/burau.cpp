#include "rtc/burau.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace rtc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw InputError("IntMatrix: size mismatch");
  IntMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      if (at(r, k) == 0) continue;
      for (int c = 0; c < n_; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
    }
  return out;
}

mpz_class det_int(const IntMatrix& m) {
  const int n = m.size();
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) { piv = r; break; }
      if (piv < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(piv, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        mpz_class num = a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c);
        mpz_class q, rr;
        mpz_fdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rr != 0) throw ConsistencyError("det_int: Bareiss division not exact");
        a.at(r, c) = q;
      }
      a.at(r, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign < 0 ? mpz_class(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

LaurentMatrix burau_generator(int strands, int index, int sign) {
  if (index < 1 || index > strands - 1)
    throw InputError("burau_generator: index out of range");
  if (sign != 1 && sign != -1)
    throw InputError("burau_generator: sign must be +1 or -1");
  LaurentMatrix m = LaurentMatrix::identity(strands);
  const int i = index - 1;
  if (sign == 1) {
    m.at(i, i) = LaurentPoly(1) - LaurentPoly::term(1, 1);      // 1 - t
    m.at(i, i + 1) = LaurentPoly::term(1, 1);                   // t
    m.at(i + 1, i) = LaurentPoly(1);
    m.at(i + 1, i + 1) = LaurentPoly();
  } else {
    m.at(i, i) = LaurentPoly();
    m.at(i, i + 1) = LaurentPoly(1);
    m.at(i + 1, i) = LaurentPoly::term(1, -1);                  // t^-1
    m.at(i + 1, i + 1) = LaurentPoly(1) - LaurentPoly::term(1, -1);
  }
  return m;
}

LaurentMatrix burau(const BraidWord& a) {
  LaurentMatrix m = LaurentMatrix::identity(a.strands());
  for (const Letter& l : a.letters())
    m = m * burau_generator(a.strands(), l.index, l.sign);
  return m;
}

ComplexMatrix evaluate(const LaurentMatrix& m, std::complex<double> t0) {
  if (t0 == std::complex<double>(0.0, 0.0))
    throw InputError("evaluate: t0 must be nonzero");
  const int n = m.size();
  ComplexMatrix out(n, std::vector<std::complex<double>>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r][c] = m.at(r, c).evaluate(t0);
  return out;
}

std::complex<double> trace_at(const BraidWord& a, std::complex<double> t0) {
  if (t0 == std::complex<double>(0.0, 0.0))
    throw InputError("trace_at: t0 must be nonzero");
  // Exact at the symplectic point; floating elsewhere.
  if (t0 == std::complex<double>(-1.0, 0.0)) {
    IntMatrix s = symplectic(a);
    mpz_class tr = 0;
    for (int i = 0; i < s.size(); ++i) tr += s.at(i, i);
    return {tr.get_d(), 0.0};
  }
  LaurentMatrix m = burau(a);
  std::complex<double> tr(0.0, 0.0);
  for (int i = 0; i < m.size(); ++i) tr += m.at(i, i).evaluate(t0);
  return tr;
}

namespace {

IntMatrix symplectic_generator(int strands, int index, int sign) {
  IntMatrix m = IntMatrix::identity(strands);
  const int i = index - 1;
  if (sign == 1) {
    m.at(i, i) = 2;        // 1 - t at t = -1
    m.at(i, i + 1) = -1;   // t
    m.at(i + 1, i) = 1;
    m.at(i + 1, i + 1) = 0;
  } else {
    m.at(i, i) = 0;
    m.at(i, i + 1) = 1;
    m.at(i + 1, i) = -1;   // t^-1
    m.at(i + 1, i + 1) = 2; // 1 - t^-1
  }
  return m;
}

}  // namespace

IntMatrix symplectic(const BraidWord& a) {
  IntMatrix m = IntMatrix::identity(a.strands());
  for (const Letter& l : a.letters())
    m = m * symplectic_generator(a.strands(), l.index, l.sign);
  return m;
}

double spectral_radius(const IntMatrix& m) {
  const int n = m.size();
  Eigen::MatrixXd d(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) d(r, c) = m.at(r, c).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(d, /*computeEigenvectors=*/false);
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(solver.eigenvalues()[i]));
  return radius;
}

double spectral_log(const BraidWord& a) {
  return std::log(std::max(1.0, spectral_radius(symplectic(a))));
}

}  // namespace rtc

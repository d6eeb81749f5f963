#include "rtc/laurent.hpp"

#include <algorithm>

namespace rtc {

LaurentPoly LaurentPoly::term(const mpz_class& c, long exponent) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[exponent] = c;
  return p;
}

mpz_class LaurentPoly::coefficient(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::prune(long key) {
  auto it = coeffs_.find(key);
  if (it != coeffs_.end() && it->second == 0) coeffs_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [k, c] : o.coeffs_) {
    out.coeffs_[k] += c;
    out.prune(k);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [k, c] : out.coeffs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [k, c] : o.coeffs_) {
    out.coeffs_[k] -= c;
    out.prune(k);
  }
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [ka, ca] : coeffs_)
    for (const auto& [kb, cb] : o.coeffs_) {
      out.coeffs_[ka + kb] += ca * cb;
    }
  for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
    it = (it->second == 0) ? out.coeffs_.erase(it) : std::next(it);
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& o) const {
  if (o.is_zero()) throw ConsistencyError("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly();
  // Shift both to ordinary polynomials and do long division over Z.
  const long shift_n = coeffs_.begin()->first;
  const long shift_d = o.coeffs_.begin()->first;
  LaurentPoly rem = *this;
  LaurentPoly out;
  const long deg_d = o.coeffs_.rbegin()->first;
  const mpz_class& lead_d = o.coeffs_.rbegin()->second;
  while (!rem.is_zero()) {
    const long deg_r = rem.coeffs_.rbegin()->first;
    const mpz_class& lead_r = rem.coeffs_.rbegin()->second;
    // t is a unit, so only the quotient's minimal exponent bounds the division:
    // an exact quotient has min exponent shift_n - shift_d.
    if (deg_r - deg_d < shift_n - shift_d)
      throw ConsistencyError("LaurentPoly: inexact division (degree)");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead_r.get_mpz_t(), lead_d.get_mpz_t());
    if (r != 0) throw ConsistencyError("LaurentPoly: inexact division (coefficient)");
    LaurentPoly t = term(q, deg_r - deg_d);
    out += t;
    rem -= t * o;
    if (!rem.is_zero() && rem.coeffs_.rbegin()->first >= deg_r)
      throw ConsistencyError("LaurentPoly: division failed to reduce degree");
  }
  return out;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> t0) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [k, c] : coeffs_)
    acc += c.get_d() * std::pow(t0, static_cast<double>(k));
  return acc;
}

mpz_class LaurentPoly::evaluate_int(long t0) const {
  if (t0 == 0) throw InputError("LaurentPoly: cannot evaluate at t = 0");
  mpz_class acc = 0;
  for (const auto& [k, c] : coeffs_) {
    if (k < 0 && t0 != 1 && t0 != -1)
      throw InputError("LaurentPoly: negative exponent needs unit t0");
    mpz_class p;
    mpz_class base(t0);
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    acc += c * p;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const bool unit = (a == 1);
    if (k == 0) {
      out += a.get_str();
    } else {
      if (!unit) out += a.get_str() + "*";
      out += "t";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (n_ != o.n_) throw InputError("LaurentMatrix: size mismatch");
  LaurentMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (int c = 0; c < n_; ++c) {
        if (o.at(k, c).is_zero()) continue;
        out.at(r, c) += at(r, k) * o.at(k, c);
      }
    }
  return out;
}

LaurentPoly det_laurent(const LaurentMatrix& m) {
  const int n = m.size();
  LaurentMatrix a = m;
  LaurentPoly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a.at(r, k).is_zero()) { piv = r; break; }
      if (piv < 0) return LaurentPoly();  // singular
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(piv, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        LaurentPoly num = a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c);
        a.at(r, c) = num.divide_exact(prev);
      }
      a.at(r, k) = LaurentPoly();
    }
    prev = a.at(k, k);
  }
  LaurentPoly det = a.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

nlohmann::ordered_json laurent_matrix_to_json(const LaurentMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.size(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.size(); ++c) {
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& [k, coef] : m.at(r, c).coefficients())
        terms.push_back({k, coef.get_str()});
      row.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw InputError("laurent matrix json: bad shape");
  const int n = static_cast<int>(j.size());
  LaurentMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(j[r].size()) != n)
      throw InputError("laurent matrix json: not square");
    for (int c = 0; c < n; ++c) {
      LaurentPoly p;
      for (const auto& t : j[r][c]) {
        mpz_class coef(t.at(1).get<std::string>());
        p += LaurentPoly::term(coef, t.at(0).get<long>());
      }
      m.at(r, c) = p;
    }
  }
  return m;
}

}  // namespace rtc

#include "rtc/invariants.hpp"

#include <algorithm>

#include "rtc/burau.hpp"
#include "rtc/order.hpp"

namespace rtc {

Convergents continued_fraction(const IndexSequence& seq) {
  if (seq.terms.empty())
    throw InputError("continued_fraction: empty index sequence");
  Convergents out;
  mpz_class p_prev = 1, p_prev2 = 0;  // p_{-1}, p_{-2}... seeded so p_0 = c_1
  mpz_class q_prev = 0, q_prev2 = 1;
  for (const mpz_class& c : seq.terms) {
    if (c < 1) throw InputError("continued_fraction: terms must be >= 1");
    mpz_class p = c * p_prev + p_prev2;
    mpz_class q = c * q_prev + q_prev2;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1)
      throw ConsistencyError("continued_fraction: convergent not coprime");
    out.numerators.push_back(p);
    out.denominators.push_back(q);
    p_prev2 = p_prev; p_prev = p;
    q_prev2 = q_prev; q_prev = q;
  }
  mpf_class value(mpq_class(out.numerators.back(), out.denominators.back()), 256);
  mp_exp_t exp;
  std::string digits = value.get_str(exp, 10, 30);
  out.decimal = digits.empty() ? "0" : digits + "e" + std::to_string(exp - (mp_exp_t)digits.size());
  return out;
}

bool is_prime(std::uint64_t p) {
  mpz_class v(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(v.get_mpz_t(), 40) > 0;
}

PadicDigits padic_expand(const IndexSequence& seq, std::uint64_t p) {
  if (!is_prime(p)) throw InputError("padic_expand: p must be prime");
  if (seq.terms.empty()) throw InputError("padic_expand: empty index sequence");
  PadicDigits out{p, {}, 0};
  mpz_class power = 1;
  mpz_class mod(static_cast<unsigned long>(p));
  for (const mpz_class& c : seq.terms) {
    mpz_class d;
    mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
    out.digits.push_back(d.get_ui());
    out.partial_sum += d * power;
    power *= mod;
  }
  return out;
}

std::vector<std::complex<double>> trace_invariant(
    const std::vector<BraidWord>& braids, std::complex<double> t0) {
  if (t0 == std::complex<double>(0.0, 0.0))
    throw InputError("trace_invariant: t0 must be nonzero");
  std::vector<std::complex<double>> out;
  out.reserve(braids.size());
  for (const BraidWord& b : braids) out.push_back(trace_at(b, t0));
  return out;
}

IndexSequence route_index_sequence(const std::vector<CascadeIndices>& cascades) {
  std::vector<std::pair<BraidWord, mpz_class>> all;
  for (const CascadeIndices& c : cascades)
    for (const auto& e : c.entries) all.push_back(e);
  if (all.empty()) throw InputError("route_index_sequence: no braids supplied");
  int max_strands = 1;
  for (const auto& [w, c] : all) max_strands = std::max(max_strands, w.strands());
  for (auto& [w, c] : all) w = include(w, max_strands);
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return compare(x.first, y.first) == ComparisonResult::Less;
  });
  IndexSequence out;
  for (const auto& [w, c] : all) out.terms.push_back(c);
  return out;
}

nlohmann::ordered_json convergents_to_json(const Convergents& c) {
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.numerators.size(); ++i)
    pairs.push_back({c.numerators[i].get_str(), c.denominators[i].get_str()});
  return nlohmann::ordered_json{{"convergents", pairs}, {"decimal", c.decimal}};
}

nlohmann::ordered_json padic_to_json(const PadicDigits& d) {
  return nlohmann::ordered_json{
      {"p", d.prime}, {"digits", d.digits}, {"sum", d.partial_sum.get_str()}};
}

}  // namespace rtc

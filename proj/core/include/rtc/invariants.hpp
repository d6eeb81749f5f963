#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rtc/braid.hpp"

namespace rtc {

/// Finite truncation of a cascade's relative-index sequence c^1, c^2, ...
struct IndexSequence {
  std::vector<mpz_class> terms;  // all >= 1
};

/// Continued-fraction convergents p_n/q_n of an index sequence.
struct Convergents {
  std::vector<mpz_class> numerators;
  std::vector<mpz_class> denominators;
  /// 30-significant-digit decimal rendering of the last convergent,
  /// attached for human reading only.
  std::string decimal;
};

struct PadicDigits {
  std::uint64_t prime;
  std::vector<std::uint64_t> digits;  // digit n-1 = c^n mod p
  mpz_class partial_sum;              // sum digits[i] * p^i
};

/// Exact convergents by the standard recurrence
/// p_n = c_n p_{n-1} + p_{n-2}, q_n = c_n q_{n-1} + q_{n-2}.
Convergents continued_fraction(const IndexSequence& seq);

PadicDigits padic_expand(const IndexSequence& seq, std::uint64_t p);

bool is_prime(std::uint64_t p);

/// Elementwise Burau trace at t0, order preserved.
std::vector<std::complex<double>> trace_invariant(
    const std::vector<BraidWord>& braids, std::complex<double> t0);

/// One cascade's braids with their already-computed relative indices.
struct CascadeIndices {
  std::string cascade_id;
  std::vector<std::pair<BraidWord, mpz_class>> entries;
};

/// Merge all cascades' braids, sort by the Dehornoy order (after inclusion
/// into the maximal strand count), and emit the c-values in braid order.
IndexSequence route_index_sequence(const std::vector<CascadeIndices>& cascades);

/// Report JSON section: {"depth", "index_terms", "convergents", "padic", ...}.
nlohmann::ordered_json convergents_to_json(const Convergents& c);
nlohmann::ordered_json padic_to_json(const PadicDigits& d);

}  // namespace rtc

#pragma once

#include <vector>

#include "rtc/braid.hpp"

namespace rtc {

enum class ComparisonResult { Less, Equal, Greater };

inline constexpr std::size_t kHandleReductionCap = 1'000'000;

/// Dehornoy handle reduction: repeatedly removes the leftmost innermost
/// handle sigma_i^e v sigma_i^-e (v using only higher-index generators)
/// until none remain. The output represents the same group element and is
/// empty, sigma-positive or sigma-negative in its lowest-index generator.
BraidWord handle_reduce(const BraidWord& a,
                        std::size_t cap = kHandleReductionCap);

/// Left-invariant linear order: a < b iff handle_reduce(a^-1 b) is
/// sigma-positive in its lowest-index generator.
ComparisonResult compare(const BraidWord& a, const BraidWord& b);

/// Word problem: true iff a represents the identity element.
bool is_trivial(const BraidWord& a);

/// Ascending stable sort under compare, after inclusion of every word into
/// the maximal strand count present.
std::vector<BraidWord> sort_braids(std::vector<BraidWord> words);

}  // namespace rtc

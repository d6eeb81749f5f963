#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtc/errors.hpp"

namespace rtc {

/// One crossing: generator index (1-based, < strands) and sign (+1 over, -1 under).
struct Letter {
  int index;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Permutation of {1..n}; image(i) is where strand starting at position i ends.
class Permutation {
 public:
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }

  /// Function composition: (*this after other), i.e. apply `other` first.
  Permutation after(const Permutation& other) const;
  Permutation inverse() const;

  /// Lengths of the disjoint cycles, sorted ascending.
  std::vector<int> cycle_lengths() const;
  bool is_single_cycle() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A word in the Artin generators of the braid group B_n.
///
/// Equality is letter-sequence equality; group-element equality lives in
/// order.hpp (is_trivial / compare). Values are immutable after construction.
class BraidWord {
 public:
  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw InputError("BraidWord: strands must be >= 1");
  }
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);

/// Cancel adjacent sigma_i sigma_i^{-1} pairs until none remain.
BraidWord free_reduce(const BraidWord& a);

/// Image under the surjection onto the symmetric group (signs ignored).
/// Letters act in word order: the first letter is the topmost crossing.
Permutation permutation(const BraidWord& a);

long long exponent_sum(const BraidWord& a);

/// Inclusion B_n -> B_m for m >= n (same letters, more strands).
BraidWord include(const BraidWord& a, int m);

/// Period-doubling cabling: each crossing of a becomes the 4-crossing block
/// that carries strand pair {2i-1,2i} over pair {2i+1,2i+2}, and a single
/// half-twist sigma_1^twist is appended. Doubles a single k-cycle permutation
/// into a single 2k-cycle.
BraidWord pd_cable(const BraidWord& a, int twist);

/// Text syntax: whitespace-separated signed generator indices, e.g. "-1 2".
/// The empty string is the identity word.
std::string to_text(const BraidWord& a);
BraidWord parse_braid(const std::string& text, int strands);

}  // namespace rtc

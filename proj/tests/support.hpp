#pragma once

#include <random>

#include "rtc/braid.hpp"
#include "rtc/burau.hpp"

namespace rtc::testing {

inline BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> idx_dist(1, strands - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<Letter> letters;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i)
    letters.push_back({idx_dist(rng), sign_dist(rng) ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

/// Rewrite by inserting braid relations / free pairs; returns a different
/// word representing the same group element.
inline BraidWord equivalent_rewrite(std::mt19937& rng, const BraidWord& w) {
  std::uniform_int_distribution<int> idx_dist(1, w.strands() - 1);
  std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(w.size()));
  std::vector<Letter> letters = w.letters();
  // insert sigma_i sigma_{i+1} sigma_i (sigma_{i+1} sigma_i sigma_{i+1})^-1
  int i = idx_dist(rng);
  if (i + 1 <= w.strands() - 1) {
    std::vector<Letter> gadget = {{i, 1},     {i + 1, 1}, {i, 1},
                                  {i + 1, -1}, {i, -1},   {i + 1, -1}};
    letters.insert(letters.begin() + pos_dist(rng), gadget.begin(), gadget.end());
  }
  int j = idx_dist(rng);
  std::vector<Letter> pair = {{j, 1}, {j, -1}};
  letters.insert(letters.begin() + pos_dist(rng) % (letters.size() + 1),
                 pair.begin(), pair.end());
  return BraidWord(w.strands(), std::move(letters));
}

}  // namespace rtc::testing

#include "rtc/order.hpp"

#include <algorithm>

namespace rtc {

namespace {

// Cancel adjacent inverse pairs in place.
void free_reduce_inplace(std::vector<Letter>& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

// Leftmost innermost handle: the first closing letter whose nearest earlier
// letter of index <= its own index matches it with opposite sign. Returns
// (open, close) or (-1, -1).
std::pair<int, int> find_handle(const std::vector<Letter>& w) {
  for (int q = 1; q < static_cast<int>(w.size()); ++q) {
    const int i = w[q].index;
    for (int p = q - 1; p >= 0; --p) {
      if (w[p].index > i) continue;
      if (w[p].index == i && w[p].sign == -w[q].sign) return {p, q};
      break;  // same index same sign, or a lower index: no handle ends at q
    }
  }
  return {-1, -1};
}

}  // namespace

BraidWord handle_reduce(const BraidWord& a, std::size_t cap) {
  std::vector<Letter> w = a.letters();
  free_reduce_inplace(w);
  std::size_t steps = 0;
  for (;;) {
    auto [p, q] = find_handle(w);
    if (p < 0) break;
    if (++steps > cap)
      throw ResourceError("handle_reduce: iteration cap exceeded");
    const int i = w[p].index;
    const int d = w[p].sign;
    std::vector<Letter> next(w.begin(), w.begin() + p);
    for (int k = p + 1; k < q; ++k) {
      const Letter& l = w[k];
      if (l.index == i + 1) {
        next.push_back({i + 1, -d});
        next.push_back({i, l.sign});
        next.push_back({i + 1, d});
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), w.begin() + q + 1, w.end());
    free_reduce_inplace(next);
    w = std::move(next);
  }
  return BraidWord(a.strands(), std::move(w));
}

ComparisonResult compare(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw InputError("compare: strand count mismatch (use include first)");
  BraidWord quotient = handle_reduce(compose(inverse(a), b));
  if (quotient.empty()) return ComparisonResult::Equal;
  int min_index = quotient.strands();
  for (const Letter& l : quotient.letters()) min_index = std::min(min_index, l.index);
  bool pos = false, neg = false;
  for (const Letter& l : quotient.letters())
    if (l.index == min_index) (l.sign > 0 ? pos : neg) = true;
  if (pos && neg)
    throw ConsistencyError("compare: reduced word is not sigma-definite");
  return pos ? ComparisonResult::Less : ComparisonResult::Greater;
}

bool is_trivial(const BraidWord& a) {
  return handle_reduce(a).empty();
}

std::vector<BraidWord> sort_braids(std::vector<BraidWord> words) {
  int max_strands = 1;
  for (const BraidWord& w : words) max_strands = std::max(max_strands, w.strands());
  for (BraidWord& w : words) w = include(w, max_strands);
  std::stable_sort(words.begin(), words.end(),
                   [](const BraidWord& x, const BraidWord& y) {
                     return compare(x, y) == ComparisonResult::Less;
                   });
  return words;
}

}  // namespace rtc

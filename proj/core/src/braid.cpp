#include "rtc/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rtc {

Permutation::Permutation(int n) : images_(n) {
  if (n < 1) throw InputError("Permutation: size must be >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw InputError("Permutation: images are not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::after(const Permutation& other) const {
  if (size() != other.size()) throw InputError("Permutation: size mismatch");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[i - 1] = image(other.image(i));
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[image(i) - 1] = i;
  return Permutation(std::move(out));
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    for (int j = i; !seen[j - 1]; j = image(j)) {
      seen[j - 1] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool Permutation::is_single_cycle() const {
  return cycle_lengths().size() == 1;
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw InputError("BraidWord: strands must be >= 1");
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index > strands - 1)
      throw InputError("BraidWord: generator index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw InputError("BraidWord: sign must be +1 or -1");
  }
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw InputError("compose: strand count mismatch");
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& a) {
  std::vector<Letter> letters(a.letters().rbegin(), a.letters().rend());
  for (Letter& l : letters) l.sign = -l.sign;
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& a) {
  std::vector<Letter> out;
  out.reserve(a.size());
  for (const Letter& l : a.letters()) {
    if (!out.empty() && out.back().index == l.index &&
        out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(a.strands(), std::move(out));
}

Permutation permutation(const BraidWord& a) {
  // cur[p-1] = current position of the strand that started at position p.
  std::vector<int> cur(a.strands());
  std::iota(cur.begin(), cur.end(), 1);
  std::vector<int> at(a.strands());  // at[pos-1] = starting strand at pos
  std::iota(at.begin(), at.end(), 1);
  for (const Letter& l : a.letters()) {
    int p = at[l.index - 1], q = at[l.index];
    std::swap(at[l.index - 1], at[l.index]);
    std::swap(cur[p - 1], cur[q - 1]);
  }
  return Permutation(std::move(cur));
}

long long exponent_sum(const BraidWord& a) {
  long long s = 0;
  for (const Letter& l : a.letters()) s += l.sign;
  return s;
}

BraidWord include(const BraidWord& a, int m) {
  if (m < a.strands()) throw InputError("include: target strand count too small");
  return BraidWord(m, a.letters());
}

BraidWord pd_cable(const BraidWord& a, int twist) {
  if (twist != 1 && twist != -1) throw InputError("pd_cable: twist must be +1 or -1");
  std::vector<Letter> out;
  out.reserve(4 * a.size() + 1);
  for (const Letter& l : a.letters()) {
    const int i = l.index, s = l.sign;
    out.push_back({2 * i, s});
    out.push_back({2 * i - 1, s});
    out.push_back({2 * i + 1, s});
    out.push_back({2 * i, s});
  }
  out.push_back({1, twist});
  return BraidWord(2 * a.strands(), std::move(out));
}

std::string to_text(const BraidWord& a) {
  std::string out;
  for (const Letter& l : a.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::istringstream in(text);
  std::vector<Letter> letters;
  long long v;
  while (in >> v) {
    if (v == 0) throw InputError("parse_braid: 0 is not a generator");
    int idx = static_cast<int>(v < 0 ? -v : v);
    letters.push_back({idx, v < 0 ? -1 : 1});
  }
  if (!in.eof()) throw InputError("parse_braid: malformed token in braid text");
  return BraidWord(strands, std::move(letters));
}

}  // namespace rtc

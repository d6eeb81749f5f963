#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rtc/braid.hpp"
#include "rtc/burau.hpp"

namespace rtc {

/// Integer matrix reduced mod N; invertible with det = 1 mod N.
class ModMatrix {
 public:
  ModMatrix(int size, std::uint64_t modulus);
  static ModMatrix identity(int size, std::uint64_t modulus);

  int size() const { return n_; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t at(int r, int c) const { return entries_[r * n_ + c]; }
  std::uint64_t& at(int r, int c) { return entries_[r * n_ + c]; }

  ModMatrix operator*(const ModMatrix& o) const;

  /// Row-major base-N digit string; canonical hash key.
  std::string encode() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  int n_;
  std::uint64_t mod_;
  std::vector<std::uint64_t> entries_;
};

struct GroupClosure {
  std::uint64_t modulus;
  std::vector<ModMatrix> generators;
  std::uint64_t element_count;
};

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus);

/// Least e >= 1 with m^e = I.
std::uint64_t matrix_order(const ModMatrix& m);

inline constexpr std::uint64_t kDefaultClosureCap = 10'000'000;

/// Breadth-first closure under products with the generators.
/// Throws ResourceError when the element count exceeds `cap`.
GroupClosure group_closure(const std::vector<ModMatrix>& gens,
                           std::uint64_t cap = kDefaultClosureCap);

/// Memo cache for braid_image_order, with versioned binary persistence.
class ImageOrderCache {
 public:
  std::uint64_t* find(int strands, std::uint64_t modulus);
  void insert(int strands, std::uint64_t modulus, std::uint64_t order);

  void save(const std::string& path) const;
  /// Missing file is a cold start; wrong magic/version throws CacheError.
  void load(const std::string& path);

  const std::map<std::pair<int, std::uint64_t>, std::uint64_t>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> entries_;
};

/// Order of the image of B_k's generators in SL(k, Z_N).
std::uint64_t braid_image_order(int strands, std::uint64_t modulus,
                                ImageOrderCache* cache = nullptr,
                                std::uint64_t cap = kDefaultClosureCap);

/// Index of the cyclic group generated by g's symplectic image inside the
/// image of the full braid group mod N. Exact by Lagrange.
std::uint64_t relative_index(const BraidWord& g, std::uint64_t modulus,
                             ImageOrderCache* cache = nullptr,
                             std::uint64_t cap = kDefaultClosureCap);

}  // namespace rtc

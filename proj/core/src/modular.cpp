#include "rtc/modular.hpp"

#include <deque>
#include <fstream>
#include <unordered_set>

namespace rtc {

namespace {
constexpr char kCacheMagic[8] = {'R', 'T', 'C', 'I', 'D', 'X', '0', '1'};
}

ModMatrix::ModMatrix(int size, std::uint64_t modulus)
    : n_(size), mod_(modulus), entries_(size * size, 0) {
  if (size < 1) throw InputError("ModMatrix: size must be >= 1");
  if (modulus < 2) throw InputError("ModMatrix: modulus must be >= 2");
}

ModMatrix ModMatrix::identity(int size, std::uint64_t modulus) {
  ModMatrix m(size, modulus);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1 % modulus;
  return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (n_ != o.n_ || mod_ != o.mod_)
    throw InputError("ModMatrix: size/modulus mismatch");
  ModMatrix out(n_, mod_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const std::uint64_t v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < n_; ++c)
        out.at(r, c) = (out.at(r, c) + v * o.at(k, c)) % mod_;
    }
  return out;
}

std::string ModMatrix::encode() const {
  // Row-major digits base N; each digit fits a byte for N <= 256, otherwise
  // little-endian 8-byte words. Deterministic either way.
  std::string key;
  if (mod_ <= 256) {
    key.reserve(entries_.size());
    for (std::uint64_t v : entries_) key.push_back(static_cast<char>(v));
  } else {
    key.reserve(entries_.size() * 8);
    for (std::uint64_t v : entries_)
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  }
  return key;
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus) {
  if (modulus < 2) throw InputError("reduce_mod: modulus must be >= 2");
  ModMatrix out(m.size(), modulus);
  mpz_class n(static_cast<unsigned long>(modulus));
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) {
      mpz_class v;
      mpz_fdiv_r(v.get_mpz_t(), m.at(r, c).get_mpz_t(), n.get_mpz_t());
      out.at(r, c) = v.get_ui();
    }
  return out;
}

std::uint64_t matrix_order(const ModMatrix& m) {
  const ModMatrix id = ModMatrix::identity(m.size(), m.modulus());
  ModMatrix p = m;
  std::uint64_t e = 1;
  while (!(p == id)) {
    p = p * m;
    ++e;
  }
  return e;
}

GroupClosure group_closure(const std::vector<ModMatrix>& gens, std::uint64_t cap) {
  if (gens.empty()) throw InputError("group_closure: need at least one generator");
  const int n = gens.front().size();
  const std::uint64_t mod = gens.front().modulus();
  for (const ModMatrix& g : gens)
    if (g.size() != n || g.modulus() != mod)
      throw InputError("group_closure: mixed sizes or moduli");

  std::unordered_set<std::string> seen;
  std::deque<ModMatrix> frontier;
  const ModMatrix id = ModMatrix::identity(n, mod);
  seen.insert(id.encode());
  frontier.push_back(id);
  while (!frontier.empty()) {
    ModMatrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const ModMatrix& g : gens) {
      ModMatrix next = cur * g;
      if (seen.insert(next.encode()).second) {
        if (seen.size() > cap)
          throw ResourceError("group_closure: element cap " + std::to_string(cap) +
                              " exceeded");
        frontier.push_back(std::move(next));
      }
    }
  }
  // Generators are invertible and the group is finite, so closure under
  // products alone already contains inverses and is the generated group.
  return GroupClosure{mod, gens, seen.size()};
}

std::uint64_t* ImageOrderCache::find(int strands, std::uint64_t modulus) {
  auto it = entries_.find({strands, modulus});
  return it == entries_.end() ? nullptr : &it->second;
}

void ImageOrderCache::insert(int strands, std::uint64_t modulus, std::uint64_t order) {
  entries_[{strands, modulus}] = order;
}

void ImageOrderCache::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheError("cache save: cannot open " + path);
  out.write(kCacheMagic, sizeof(kCacheMagic));
  std::uint64_t count = entries_.size();
  out.write(reinterpret_cast<const char*>(&count), sizeof(count));
  for (const auto& [key, order] : entries_) {
    std::uint64_t k = static_cast<std::uint64_t>(key.first);
    out.write(reinterpret_cast<const char*>(&k), sizeof(k));
    out.write(reinterpret_cast<const char*>(&key.second), sizeof(key.second));
    out.write(reinterpret_cast<const char*>(&order), sizeof(order));
  }
  if (!out) throw CacheError("cache save: write failed for " + path);
}

void ImageOrderCache::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;  // cold start
  char magic[sizeof(kCacheMagic)];
  in.read(magic, sizeof(magic));
  if (!in || !std::equal(magic, magic + sizeof(magic), kCacheMagic))
    throw CacheError("cache load: " + path +
                     " has wrong magic/version; delete it and recompute");
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&count), sizeof(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t k, n, order;
    in.read(reinterpret_cast<char*>(&k), sizeof(k));
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    in.read(reinterpret_cast<char*>(&order), sizeof(order));
    if (!in) throw CacheError("cache load: " + path + " is truncated or corrupt");
    entries_[{static_cast<int>(k), n}] = order;
  }
}

std::uint64_t braid_image_order(int strands, std::uint64_t modulus,
                                ImageOrderCache* cache, std::uint64_t cap) {
  if (strands < 1) throw InputError("braid_image_order: strands must be >= 1");
  if (modulus < 2) throw InputError("braid_image_order: modulus must be >= 2");
  if (cache)
    if (std::uint64_t* hit = cache->find(strands, modulus)) return *hit;
  std::uint64_t order = 1;
  if (strands >= 2) {
    std::vector<ModMatrix> gens;
    for (int i = 1; i < strands; ++i) {
      BraidWord g(strands, {{i, 1}});
      gens.push_back(reduce_mod(symplectic(g), modulus));
    }
    order = group_closure(gens, cap).element_count;
  }
  if (cache) cache->insert(strands, modulus, order);
  return order;
}

std::uint64_t relative_index(const BraidWord& g, std::uint64_t modulus,
                             ImageOrderCache* cache, std::uint64_t cap) {
  const std::uint64_t ambient = braid_image_order(g.strands(), modulus, cache, cap);
  const std::uint64_t cyclic = matrix_order(reduce_mod(symplectic(g), modulus));
  if (ambient % cyclic != 0)
    throw ConsistencyError("relative_index: cyclic order does not divide image order");
  return ambient / cyclic;
}

}  // namespace rtc

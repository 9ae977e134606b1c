#pragma once

// Dynamic bitset sized at construction: the universal currency for subgroup
// computations.  Word-parallel and/or/subset tests are what make full-lattice
// enumeration cheap at the orders this library targets.

#include <bit>
#include <cstdint>
#include <vector>

namespace cdlat {

class Bitset {
 public:
  Bitset() : nbits_(0) {}
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size_bits() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const Bitset& other) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  Bitset operator&(const Bitset& other) const {
    Bitset r(nbits_);
    for (size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & other.words_[k];
    return r;
  }

  Bitset operator|(const Bitset& other) const {
    Bitset r(nbits_);
    for (size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] | other.words_[k];
    return r;
  }

  bool operator==(const Bitset& other) const {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }
  bool operator!=(const Bitset& other) const { return !(*this == other); }

  // Numeric comparison of the underlying bit pattern (bit i has weight 2^i);
  // used as the deterministic tie-break after popcount in lattice ordering.
  static int compare_value(const Bitset& a, const Bitset& b) {
    for (size_t k = a.words_.size(); k-- > 0;) {
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k] ? -1 : 1;
    }
    return 0;
  }

  // (popcount, value) ordering used everywhere subgroup lists are sorted.
  bool lattice_less(const Bitset& other) const {
    int ca = count(), cb = other.count();
    if (ca != cb) return ca < cb;
    return compare_value(*this, other) < 0;
  }

  // Iterate set bits in increasing index order.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        f(int(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  // Strict-weak order for use in ordered containers (raw value order).
  bool operator<(const Bitset& other) const {
    return compare_value(*this, other) < 0;
  }

 private:
  int nbits_;
  std::vector<uint64_t> words_;
};

}  // namespace cdlat

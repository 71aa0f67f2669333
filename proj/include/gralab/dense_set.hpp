#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gralab {

// Fixed-universe bit set over element indices [0, n). Membership sets of
// substructures are kept dense so containment tests are word operations.
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(uint32_t n) : n_(n), w_((n + 63) / 64, 0) {}

  uint32_t universe() const { return n_; }
  bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(uint32_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool subset_of(const DenseSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const DenseSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  DenseSet& operator|=(const DenseSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  DenseSet& operator&=(const DenseSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::vector<uint32_t> to_list() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        out.push_back(uint32_t(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  // Total order used to canonicalize lattices: smaller cardinality first,
  // then (for equal cardinality) lexicographically smaller sorted member list.
  static int compare(const DenseSet& a, const DenseSet& b) {
    size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb ? -1 : 1;
    for (size_t i = 0; i < a.w_.size(); ++i) {
      uint64_t d = a.w_[i] ^ b.w_[i];
      if (d) {
        uint64_t low = d & (~d + 1);
        return (a.w_[i] & low) ? -1 : 1;
      }
    }
    return 0;
  }

 private:
  uint32_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace gralab

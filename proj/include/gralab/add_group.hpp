#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gralab/errors.hpp"

namespace gralab {

using Coords = std::vector<uint32_t>;

// Finite abelian group presented as a direct sum of cyclic factors
// Z_{n_0} x ... x Z_{n_{k-1}}. Elements are mixed-radix indices; the index
// order equals lexicographic order of coordinate vectors, which is what makes
// "lexicographically smallest" witness rules equal to "smallest index".
class AddGroup {
 public:
  AddGroup() { size_ = 1; }

  explicit AddGroup(Coords orders, uint64_t cap = kDefaultAmbientCap);

  static constexpr uint64_t kDefaultAmbientCap = 65536;

  uint32_t rank() const { return k_; }
  uint32_t size() const { return size_; }
  const Coords& orders() const { return orders_; }
  uint32_t order(uint32_t i) const { return orders_[i]; }
  uint32_t stride(uint32_t i) const { return strides_[i]; }

  uint16_t digit(uint32_t pos, uint32_t x) const { return digits_[pos][x]; }

  uint32_t encode(std::span<const uint32_t> coords) const;
  Coords decode(uint32_t x) const;

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t r = 0;
    for (uint32_t i = 0; i < k_; ++i) {
      uint32_t d = uint32_t(digits_[i][a]) + digits_[i][b];
      if (d >= orders_[i]) d -= orders_[i];
      r += d * strides_[i];
    }
    return r;
  }

  uint32_t neg(uint32_t a) const {
    uint32_t r = 0;
    for (uint32_t i = 0; i < k_; ++i) {
      uint32_t d = digits_[i][a];
      if (d) d = orders_[i] - d;
      r += d * strides_[i];
    }
    return r;
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

  // c * a with c taken mod the coordinate orders.
  uint32_t scale(uint64_t c, uint32_t a) const {
    uint32_t r = 0;
    for (uint32_t i = 0; i < k_; ++i) {
      uint32_t d = uint32_t((c * digits_[i][a]) % orders_[i]);
      r += d * strides_[i];
    }
    return r;
  }

  uint32_t basis_element(uint32_t i) const {
    return (1u % orders_[i]) * strides_[i];
  }

  // Additive order of an element.
  uint32_t element_order(uint32_t a) const;

 private:
  Coords orders_;
  Coords strides_;
  uint32_t k_ = 0;
  uint32_t size_ = 1;
  std::vector<std::vector<uint16_t>> digits_;
};

}  // namespace gralab

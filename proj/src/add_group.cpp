#include "gralab/add_group.hpp"

#include <numeric>

namespace gralab {

AddGroup::AddGroup(Coords orders, uint64_t cap) : orders_(std::move(orders)) {
  k_ = uint32_t(orders_.size());
  uint64_t n = 1;
  for (uint32_t o : orders_) {
    if (o == 0) throw ValidationError("cyclic factor order must be positive");
    n *= o;
    if (n > cap)
      throw CapExceeded("ambient size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
  size_ = uint32_t(n);
  strides_.assign(k_, 1);
  for (int i = int(k_) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * orders_[i + 1];
  digits_.assign(k_, {});
  for (uint32_t i = 0; i < k_; ++i) {
    digits_[i].resize(size_);
    for (uint32_t x = 0; x < size_; ++x)
      digits_[i][x] = uint16_t((x / strides_[i]) % orders_[i]);
  }
}

uint32_t AddGroup::encode(std::span<const uint32_t> coords) const {
  if (coords.size() != k_)
    throw ValidationError("coordinate vector has wrong length");
  uint32_t r = 0;
  for (uint32_t i = 0; i < k_; ++i) r += (coords[i] % orders_[i]) * strides_[i];
  return r;
}

Coords AddGroup::decode(uint32_t x) const {
  Coords c(k_);
  for (uint32_t i = 0; i < k_; ++i) c[i] = digits_[i][x];
  return c;
}

uint32_t AddGroup::element_order(uint32_t a) const {
  uint32_t ord = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t d = digits_[i][a];
    uint32_t o = orders_[i] / std::gcd(orders_[i], d == 0 ? orders_[i] : d);
    ord = std::lcm(ord, o);
  }
  return ord;
}

}  // namespace gralab

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gralab/errors.hpp"

namespace gralab {

// Finite group given by its composition table. Grading groups are small (the
// whole table is validated exhaustively).
class FiniteGroup {
 public:
  static FiniteGroup cyclic(uint32_t n);
  // Direct product of cyclic groups Z_{o_0} x ... (orders non-empty).
  static FiniteGroup product_of_cyclic(const std::vector<uint32_t>& orders);
  static FiniteGroup from_table(std::vector<std::vector<uint32_t>> table);

  uint32_t size() const { return n_; }
  uint32_t identity() const { return identity_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return op_[a * n_ + b]; }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  bool is_abelian() const;

  // Coordinate view for groups built from cyclic orders; empty otherwise.
  const std::vector<uint32_t>& cyclic_orders() const { return orders_; }
  uint32_t encode(std::span<const uint32_t> coords) const;
  std::vector<uint32_t> coords_of(uint32_t g) const;

 private:
  void validate() const;

  uint32_t n_ = 1;
  uint32_t identity_ = 0;
  std::vector<uint32_t> op_{0};
  std::vector<uint32_t> inv_{0};
  std::vector<uint32_t> orders_;
};

}  // namespace gralab

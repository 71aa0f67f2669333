#include "gralab/group.hpp"

#include <string>

namespace gralab {

FiniteGroup FiniteGroup::cyclic(uint32_t n) {
  return product_of_cyclic({n});
}

FiniteGroup FiniteGroup::product_of_cyclic(const std::vector<uint32_t>& orders) {
  if (orders.empty()) throw ValidationError("grading group needs at least one cyclic order");
  uint64_t n = 1;
  for (uint32_t o : orders) {
    if (o == 0) throw ValidationError("cyclic order must be positive");
    n *= o;
    if (n > 4096) throw CapExceeded("grading group too large");
  }
  FiniteGroup g;
  g.n_ = uint32_t(n);
  g.orders_ = orders;
  std::vector<uint32_t> strides(orders.size(), 1);
  for (int i = int(orders.size()) - 2; i >= 0; --i)
    strides[i] = strides[i + 1] * orders[i + 1];
  g.op_.assign(size_t(g.n_) * g.n_, 0);
  for (uint32_t a = 0; a < g.n_; ++a)
    for (uint32_t b = 0; b < g.n_; ++b) {
      uint32_t r = 0;
      for (size_t i = 0; i < orders.size(); ++i) {
        uint32_t da = (a / strides[i]) % orders[i];
        uint32_t db = (b / strides[i]) % orders[i];
        r += ((da + db) % orders[i]) * strides[i];
      }
      g.op_[a * g.n_ + b] = r;
    }
  g.identity_ = 0;
  g.inv_.resize(g.n_);
  for (uint32_t a = 0; a < g.n_; ++a) {
    uint32_t r = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
      uint32_t da = (a / strides[i]) % orders[i];
      r += ((orders[i] - da) % orders[i]) * strides[i];
    }
    g.inv_[a] = r;
  }
  g.validate();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<uint32_t>> table) {
  FiniteGroup g;
  g.n_ = uint32_t(table.size());
  if (g.n_ == 0) throw ValidationError("empty composition table");
  g.op_.assign(size_t(g.n_) * g.n_, 0);
  for (uint32_t a = 0; a < g.n_; ++a) {
    if (table[a].size() != g.n_) throw ValidationError("composition table not square");
    for (uint32_t b = 0; b < g.n_; ++b) {
      if (table[a][b] >= g.n_) throw ValidationError("composition table entry out of range");
      g.op_[a * g.n_ + b] = table[a][b];
    }
  }
  // Locate a two-sided identity.
  bool found = false;
  for (uint32_t e = 0; e < g.n_ && !found; ++e) {
    bool ok = true;
    for (uint32_t a = 0; a < g.n_; ++a)
      if (g.mul(e, a) != a || g.mul(a, e) != a) { ok = false; break; }
    if (ok) { g.identity_ = e; found = true; }
  }
  if (!found) throw ValidationError("composition table has no identity");
  g.inv_.assign(g.n_, g.n_);
  for (uint32_t a = 0; a < g.n_; ++a)
    for (uint32_t b = 0; b < g.n_; ++b)
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) g.inv_[a] = b;
  for (uint32_t a = 0; a < g.n_; ++a)
    if (g.inv_[a] == g.n_) throw ValidationError("element without inverse at index " + std::to_string(a));
  g.validate();
  return g;
}

void FiniteGroup::validate() const {
  for (uint32_t a = 0; a < n_; ++a)
    for (uint32_t b = 0; b < n_; ++b)
      for (uint32_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ValidationError("group composition not associative at (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
}

bool FiniteGroup::is_abelian() const {
  for (uint32_t a = 0; a < n_; ++a)
    for (uint32_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

uint32_t FiniteGroup::encode(std::span<const uint32_t> coords) const {
  if (orders_.empty()) {
    if (coords.size() != 1 || coords[0] >= n_)
      throw ValidationError("group element index out of range");
    return coords[0];
  }
  if (coords.size() != orders_.size())
    throw ValidationError("group element coordinate length mismatch");
  uint32_t stride = n_, r = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    stride /= orders_[i];
    r += (coords[i] % orders_[i]) * stride;
  }
  return r;
}

std::vector<uint32_t> FiniteGroup::coords_of(uint32_t g) const {
  if (orders_.empty()) return {g};
  std::vector<uint32_t> c(orders_.size());
  uint32_t stride = n_;
  for (size_t i = 0; i < orders_.size(); ++i) {
    stride /= orders_[i];
    c[i] = (g / stride) % orders_[i];
  }
  return c;
}

}  // namespace gralab

#include "gralab/ring.hpp"

namespace gralab {

FiniteRing::FiniteRing(Coords orders, std::vector<Coords> structure_constants,
                       Coords one, uint64_t cap)
    : ag_(std::move(orders), cap) {
  uint32_t k = ag_.rank();
  if (structure_constants.size() != size_t(k) * k)
    throw ValidationError("structure constant table must have k*k entries");
  sc_flat_.assign(size_t(k) * k * k, 0);
  sc_idx_.assign(size_t(k) * k, 0);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j) {
      const Coords& v = structure_constants[i * k + j];
      if (v.size() != k) throw ValidationError("structure constant has wrong length");
      for (uint32_t l = 0; l < k; ++l)
        sc_flat_[(size_t(i) * k + j) * k + l] = v[l] % ag_.order(l);
      sc_idx_[i * k + j] = ag_.encode(std::span<const uint32_t>(
          &sc_flat_[(size_t(i) * k + j) * k], k));
    }
  one_ = ag_.encode(one);
}

uint32_t FiniteRing::mul(uint32_t a, uint32_t b) const {
  uint32_t k = ag_.rank();
  uint64_t acc[32] = {0};
  for (uint32_t i = 0; i < k; ++i) {
    uint64_t da = ag_.digit(i, a);
    if (!da) continue;
    for (uint32_t j = 0; j < k; ++j) {
      uint64_t db = ag_.digit(j, b);
      if (!db) continue;
      uint64_t cij = da * db;
      const uint32_t* v = &sc_flat_[(size_t(i) * k + j) * k];
      for (uint32_t l = 0; l < k; ++l) acc[l] += cij * v[l];
    }
  }
  uint32_t r = 0;
  for (uint32_t l = 0; l < k; ++l)
    r += uint32_t(acc[l] % ag_.order(l)) * ag_.stride(l);
  return r;
}

FiniteRing FiniteRing::zmod(uint32_t n) {
  if (n == 0) throw ValidationError("zmod requires n >= 1");
  std::vector<Coords> sc{{1u % n}};
  FiniteRing r({n}, std::move(sc), {1u % n});
  r.validate();
  return r;
}

FiniteRing FiniteRing::matrix_ring(const FiniteRing& base, uint32_t k, uint64_t cap) {
  if (k == 0) throw ValidationError("matrix size must be >= 1");
  if (!base.is_commutative())
    throw ValidationError("matrix ring base must be commutative");
  uint32_t kb = base.rank();
  uint32_t rk = k * k * kb;
  Coords orders(rk);
  for (uint32_t p = 0; p < k; ++p)
    for (uint32_t q = 0; q < k; ++q)
      for (uint32_t t = 0; t < kb; ++t)
        orders[(p * k + q) * kb + t] = base.group().order(t);

  std::vector<Coords> sc(size_t(rk) * rk, Coords(rk, 0));
  for (uint32_t p = 0; p < k; ++p)
    for (uint32_t q = 0; q < k; ++q)
      for (uint32_t t = 0; t < kb; ++t) {
        uint32_t i = (p * k + q) * kb + t;
        for (uint32_t l = 0; l < k; ++l)
          for (uint32_t m = 0; m < k; ++m)
            for (uint32_t u = 0; u < kb; ++u) {
              uint32_t j = (l * k + m) * kb + u;
              if (q != l) continue;  // e_pq * e_lm = delta_ql * e_pm
              Coords prod = base.group().decode(base.basis_product(t, u));
              Coords& dst = sc[size_t(i) * rk + j];
              for (uint32_t w = 0; w < kb; ++w)
                dst[(p * k + m) * kb + w] = prod[w];
            }
      }

  Coords one(rk, 0);
  Coords base_one = base.group().decode(base.one());
  for (uint32_t p = 0; p < k; ++p)
    for (uint32_t t = 0; t < kb; ++t)
      one[(p * k + p) * kb + t] = base_one[t];

  FiniteRing r(std::move(orders), std::move(sc), std::move(one), cap);
  r.validate();
  return r;
}

FiniteRing FiniteRing::product(const std::vector<FiniteRing>& factors, uint64_t cap) {
  if (factors.empty()) throw ValidationError("product ring needs at least one factor");
  Coords orders;
  std::vector<uint32_t> offset;
  for (const auto& f : factors) {
    offset.push_back(uint32_t(orders.size()));
    for (uint32_t i = 0; i < f.rank(); ++i) orders.push_back(f.group().order(i));
  }
  uint32_t rk = uint32_t(orders.size());
  std::vector<Coords> sc(size_t(rk) * rk, Coords(rk, 0));
  Coords one(rk, 0);
  for (size_t f = 0; f < factors.size(); ++f) {
    const FiniteRing& r = factors[f];
    uint32_t off = offset[f];
    for (uint32_t i = 0; i < r.rank(); ++i)
      for (uint32_t j = 0; j < r.rank(); ++j) {
        Coords prod = r.group().decode(r.basis_product(i, j));
        Coords& dst = sc[size_t(off + i) * rk + (off + j)];
        for (uint32_t l = 0; l < r.rank(); ++l) dst[off + l] = prod[l];
      }
    Coords o = r.group().decode(r.one());
    for (uint32_t l = 0; l < r.rank(); ++l) one[off + l] = o[l];
  }
  FiniteRing r(std::move(orders), std::move(sc), std::move(one), cap);
  r.validate();
  return r;
}

void FiniteRing::validate() const {
  uint32_t k = rank();
  // Bilinear extension must respect the additive orders of both factors.
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j) {
      uint32_t p = basis_product(i, j);
      for (uint32_t l = 0; l < k; ++l) {
        uint64_t d = ag_.digit(l, p);
        if ((d * ag_.order(i)) % ag_.order(l) != 0 ||
            (d * ag_.order(j)) % ag_.order(l) != 0)
          throw ValidationError("structure constants incompatible with additive orders at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j)
      for (uint32_t l = 0; l < k; ++l) {
        uint32_t lhs = mul(basis_product(i, j), ag_.basis_element(l));
        uint32_t rhs = mul(ag_.basis_element(i), basis_product(j, l));
        if (lhs != rhs)
          throw ValidationError("multiplication not associative on basis triple (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(l) + ")");
      }
  for (uint32_t i = 0; i < k; ++i) {
    uint32_t b = ag_.basis_element(i);
    if (mul(one_, b) != b || mul(b, one_) != b)
      throw ValidationError("unity fails on basis generator " + std::to_string(i));
  }
  if (size() > 1 && one_ == 0)
    throw ValidationError("unity equals zero in a nonzero ring");
}

bool FiniteRing::is_commutative() const {
  uint32_t k = rank();
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = i + 1; j < k; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

}  // namespace gralab

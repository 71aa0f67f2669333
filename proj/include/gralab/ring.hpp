#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gralab/add_group.hpp"

namespace gralab {

// Finite associative unital ring presented by additive cyclic factors plus
// structure constants: basis generators b_0..b_{k-1} of additive orders n_i,
// with b_i * b_j given as a coordinate vector. Multiplication of arbitrary
// elements is the bilinear extension.
class FiniteRing {
 public:
  FiniteRing() = default;
  FiniteRing(Coords orders, std::vector<Coords> structure_constants, Coords one,
             uint64_t cap = AddGroup::kDefaultAmbientCap);

  static FiniteRing zmod(uint32_t n);
  // k x k matrices over a commutative base ring. Basis layout: the generator
  // for matrix cell (p,q) over base generator t has index (p*k + q)*base.rank() + t.
  static FiniteRing matrix_ring(const FiniteRing& base, uint32_t k,
                                uint64_t cap = AddGroup::kDefaultAmbientCap);
  static FiniteRing product(const std::vector<FiniteRing>& factors,
                            uint64_t cap = AddGroup::kDefaultAmbientCap);

  const AddGroup& group() const { return ag_; }
  uint32_t rank() const { return ag_.rank(); }
  uint32_t size() const { return ag_.size(); }
  uint32_t zero() const { return 0; }
  uint32_t one() const { return one_; }

  uint32_t add(uint32_t a, uint32_t b) const { return ag_.add(a, b); }
  uint32_t neg(uint32_t a) const { return ag_.neg(a); }
  uint32_t mul(uint32_t a, uint32_t b) const;

  // Structure constant b_i * b_j as an element index.
  uint32_t basis_product(uint32_t i, uint32_t j) const { return sc_idx_[i * rank() + j]; }

  // Exhaustive axiom check: associativity on all basis triples, two-sided
  // unity, bilinearity well-definedness. Throws ValidationError with the
  // first violating triple.
  void validate() const;

  bool is_commutative() const;

 private:
  AddGroup ag_;
  std::vector<uint32_t> sc_flat_;  // (i*k + j)*k + l, coords of b_i*b_j
  std::vector<uint32_t> sc_idx_;   // b_i*b_j as element index
  uint32_t one_ = 0;
};

}  // namespace gralab

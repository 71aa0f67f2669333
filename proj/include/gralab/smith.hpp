#pragma once

#include <cstdint>
#include <vector>

namespace gralab {

using IntMat = std::vector<std::vector<long long>>;

// Row basis of the lattice spanned by `rows` inside Z^s, returned as an s x s
// upper-triangular matrix with positive diagonal. The input must span a
// finite-index sublattice of Z^s.
IntMat hermite_basis(IntMat rows, size_t s);

struct SmithResult {
  std::vector<long long> diag;  // d_0 | d_1 | ..., all positive
  IntMat v_inv;                 // inverse of the accumulated column transform
};

// Diagonalizes the lattice spanned by the rows of `c` (which must have full
// column rank s): there are unimodular U, V with U*C*V diagonal. Only the
// diagonal and V^{-1} are returned; V^{-1} maps new coordinates back to old.
SmithResult smith_normal_form(IntMat c, size_t s);

struct CyclicDecomposition {
  std::vector<uint32_t> orders;                 // invariant factors > 1
  std::vector<std::vector<uint32_t>> gens;      // ambient coordinate vectors
};

// Cyclic-factor presentation of the quotient group
//   <gens> + R  /  <rels> + R   inside  Z_{n_0} x ... x Z_{n_{s-1}},
// where R is the relation lattice of the ambient orders. `rels` must generate
// a subgroup of the subgroup generated by `gens`.
CyclicDecomposition cyclic_decomposition(
    const std::vector<uint32_t>& ambient_orders,
    const std::vector<std::vector<uint32_t>>& gens,
    const std::vector<std::vector<uint32_t>>& rels);

}  // namespace gralab

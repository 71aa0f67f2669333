#pragma once

#include "gralab/context.hpp"

namespace gralab {

// Predicate deciders. Negative verdicts carry the lexicographically first
// witness in (x, y, L-index) order (or (I-index, J-index) for ideal-pair
// predicates) and are re-checked through the naive definitional evaluator
// before being returned.
Verdict classify_submodule(StructCtx& ctx, int k_idx, Pred p);
Verdict classify_ideal(StructCtx& ctx, const Substructure& p_sub, Pred p);
Verdict classify_component(StructCtx& ctx, int k_idx, uint32_t g, Pred p);

// Memoizing wrapper for lattice members (g < 0 for non-component predicates).
const Verdict& classify_cached(StructCtx& ctx, int k_idx, Pred p, int g = -1);

std::optional<TripleZero> find_classical_triple_zero(StructCtx& ctx, int k_idx);
Json triple_zero_json(StructCtx& ctx, const TripleZero& tz);

bool is_faithful(StructCtx& ctx, const Substructure& l);
bool all_nonzero_submodules_faithful(StructCtx& comp_ctx);

// Every left ideal of the ring two-sided; on success the consequence
// xA <= Ax is verified as an internal invariant.
const Verdict& is_left_duo(StructCtx& ctx);

// Bounded u-module check over the full submodule lattice. notes report the
// bound and whether the check was exhaustive (bound >= lattice size).
Verdict is_u_module(StructCtx& ctx, uint32_t cover_bound = 3);

Verdict is_graded_multiplication(StructCtx& ctx);

// Graded radical of a graded ideal of a left Duo ring: elements all of whose
// homogeneous parts have some power in the ideal.
Substructure graded_radical(StructCtx& ctx, const Substructure& ideal);

// Naive definitional re-evaluation of a witness. `g` names the component for
// component predicates.
bool validate_witness(StructCtx& ctx, Pred p, const Substructure& k,
                      std::optional<uint32_t> g, const Json& witness);
bool validate_triple_zero(StructCtx& ctx, const Substructure& k, const Json& witness);

// Helpers shared with the theorem suite.
bool product_contained(const GradedModule& m, std::span<const uint32_t> ring_gens,
                       std::span<const uint32_t> mod_gens, const DenseSet& k);
bool product_nonzero(const GradedModule& m, std::span<const uint32_t> ring_gens,
                     std::span<const uint32_t> mod_gens);
bool subset_by_gens(std::span<const uint32_t> gens, const DenseSet& s);

}  // namespace gralab

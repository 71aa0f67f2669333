#pragma once

#include <functional>
#include <span>
#include <unordered_map>

#include "gralab/dense_set.hpp"
#include "gralab/graded.hpp"

namespace gralab {

enum class SubKind { Submodule, LeftIdeal, TwoSidedIdeal, AdditiveSubgroup };

// A substructure carries a dense membership set for O(1) tests plus two
// generator lists: the seeds it was closed from and a small additive
// generating set extracted during closure. Containment tests against
// addition-closed sets only ever touch `addgens`.
struct Substructure {
  SubKind kind = SubKind::Submodule;
  DenseSet set;
  std::vector<uint32_t> members;  // sorted ascending
  std::vector<uint32_t> seeds;
  std::vector<uint32_t> addgens;

  size_t size() const { return members.size(); }
  bool contains(uint32_t x) const { return set.test(x); }
  bool is_zero() const { return members.size() == 1; }
};

using UnaryAction = std::function<uint32_t(uint32_t)>;

std::vector<UnaryAction> submodule_actions(const GradedModule& m);
std::vector<UnaryAction> left_ideal_actions(const FiniteRing& r);
std::vector<UnaryAction> two_sided_ideal_actions(const FiniteRing& r);

// Worklist closure engine. Maintains the invariant that the current set is a
// subgroup; absorbing an element extends it coset by coset, so each growth
// step is linear in the result and the recorded absorb seeds form a small
// additive generating set.
class Closure {
 public:
  explicit Closure(const AddGroup& g);
  void seed_with(const Substructure& s);
  void absorb(uint32_t u);
  void run_actions(const std::vector<UnaryAction>& actions);
  Substructure finish(SubKind kind, std::vector<uint32_t> seeds);

 private:
  const AddGroup& g_;
  DenseSet set_;
  std::vector<uint32_t> members_;
  std::vector<uint32_t> addgens_;
};

Substructure close_submodule(const GradedModule& m, std::span<const uint32_t> gens);
Substructure close_left_ideal(const FiniteRing& r, std::span<const uint32_t> gens);
Substructure close_two_sided_ideal(const FiniteRing& r, std::span<const uint32_t> gens);
Substructure close_additive(const AddGroup& g, std::span<const uint32_t> gens);

// Lattice join (sum of substructures of the same kind) and meet.
Substructure join(const AddGroup& g, const Substructure& a, const Substructure& b);
Substructure intersect(const AddGroup& g, const Substructure& a, const Substructure& b);

std::vector<uint32_t> extract_addgens(const AddGroup& g,
                                      const std::vector<uint32_t>& members);

bool is_graded(const GradedModule& m, const Substructure& k);
bool is_graded(const GradedRing& r, const Substructure& k);

// Complete substructure lattice, canonically ordered by (cardinality, member
// list); the zero substructure is index 0 and the whole structure is last.
struct Lattice {
  std::vector<Substructure> items;
  int index_of(const DenseSet& s) const;

  std::unordered_map<uint64_t, std::vector<uint32_t>> by_hash;
  void rebuild_index();
};

// Join-closure of the cyclic substructures generated by `seeds` under the
// given scalar actions. Throws CapExceeded instead of truncating.
Lattice enumerate_lattice(const AddGroup& ag, const std::vector<UnaryAction>& actions,
                          std::span<const uint32_t> seeds, SubKind kind, uint64_t cap);

Lattice enumerate_graded_submodules(const GradedModule& m, uint64_t cap = 20000);
Lattice enumerate_all_submodules(const GradedModule& m, uint64_t cap = 20000);
Lattice enumerate_graded_left_ideals(const GradedRing& r, uint64_t cap = 20000);
Lattice enumerate_graded_two_sided_ideals(const GradedRing& r, uint64_t cap = 20000);
Lattice enumerate_all_left_ideals(const FiniteRing& r, uint64_t cap = 20000);
Lattice enumerate_all_two_sided_ideals(const FiniteRing& r, uint64_t cap = 20000);
// All additive subgroups, ignoring any action (oracle support and the
// is_graded example paths).
Lattice enumerate_subgroups(const AddGroup& g, uint64_t cap = 2000000);

// {a in universe : a*x in K for every additive generator x of X}. The
// universe is the whole ring when `universe` is null. Generator sufficiency
// holds because K is addition-closed.
DenseSet colon_in_ring(const GradedModule& m, const DenseSet& k,
                       std::span<const uint32_t> x_addgens,
                       const std::vector<uint32_t>* universe = nullptr);
// Ring-internal variant: {a : a*x in K} with X, K inside the ring itself.
DenseSet colon_in_ring(const FiniteRing& r, const DenseSet& k,
                       std::span<const uint32_t> x_addgens,
                       const std::vector<uint32_t>* universe = nullptr);
// Module-side colon (K :_M r) = {m : r*m in K}.
DenseSet colon_in_module(const GradedModule& m, const DenseSet& k, uint32_t r,
                         const std::vector<uint32_t>* universe = nullptr);

DenseSet annihilator_in_ring(const GradedModule& m, std::span<const uint32_t> x_addgens,
                             const std::vector<uint32_t>* universe = nullptr);

bool is_maximal_graded(const Lattice& graded_subs, int k_idx);

enum class SandwichOutcome { Holds, ProductZero, NotContained };

// Classifies 0 != x*Mid*y*L <= K via the colon reduction; Mid is given by its
// additive generators (ring basis for the full middle set A).
SandwichOutcome sandwich_test(const GradedModule& m, uint32_t x, uint32_t y,
                              std::span<const uint32_t> middle_addgens,
                              const Substructure& l, const DenseSet& k);

}  // namespace gralab

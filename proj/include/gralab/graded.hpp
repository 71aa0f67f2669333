#pragma once

#include <memory>
#include <optional>

#include "gralab/group.hpp"
#include "gralab/ring.hpp"

namespace gralab {

// Gradings are basis-aligned: every additive basis generator is homogeneous.
// Component projection is then an exact digit mask and the direct-sum
// decomposition is automatic.
class GradedRing {
 public:
  GradedRing(FiniteRing ring, FiniteGroup grp, std::vector<uint32_t> degree);

  static GradedRing trivial(FiniteRing ring);
  // Good grading of a matrix ring: cell (p,q) has degree sigma(p)*sigma(q)^-1.
  static GradedRing good_matrix_grading(FiniteRing matrix_ring, uint32_t mat_size,
                                        FiniteGroup grp,
                                        const std::vector<uint32_t>& sigma);

  const FiniteRing& ring() const { return ring_; }
  const FiniteGroup& grading_group() const { return grp_; }
  uint32_t degree_of_basis(uint32_t i) const { return degree_[i]; }

  // Projection of x onto the component of degree g.
  uint32_t part(uint32_t x, uint32_t g) const;
  bool is_homogeneous(uint32_t x) const;
  // Degree of a nonzero homogeneous element; nullopt if not homogeneous.
  std::optional<uint32_t> degree_of(uint32_t x) const;

  // Sorted element list of the component A_g (always contains 0).
  const std::vector<uint32_t>& component(uint32_t g) const { return comp_[g]; }
  // Basis indices of degree g.
  const std::vector<uint32_t>& component_basis(uint32_t g) const { return comp_basis_[g]; }
  // Sorted union of all components.
  const std::vector<uint32_t>& homogeneous_elements() const { return homog_; }

 private:
  void build_components();
  void validate() const;

  FiniteRing ring_;
  FiniteGroup grp_;
  std::vector<uint32_t> degree_;
  std::vector<std::vector<uint32_t>> comp_;
  std::vector<std::vector<uint32_t>> comp_basis_;
  std::vector<uint32_t> homog_;
};

// Graded left module over a graded ring, presented like a ring: additive
// cyclic factors plus action constants b_i * m_j.
class GradedModule {
 public:
  GradedModule(std::shared_ptr<const GradedRing> ring, Coords orders,
               std::vector<Coords> action_constants, std::vector<uint32_t> degree,
               uint64_t cap = AddGroup::kDefaultAmbientCap);

  // The ring viewed as a graded left module over itself.
  static std::shared_ptr<GradedModule> regular(std::shared_ptr<const GradedRing> ring);
  // Componentwise product of modules over the same ring.
  static std::shared_ptr<GradedModule> direct_product(
      const std::shared_ptr<const GradedModule>& m,
      const std::shared_ptr<const GradedModule>& s,
      uint64_t cap = AddGroup::kDefaultAmbientCap);

  const GradedRing& ring() const { return *ring_; }
  std::shared_ptr<const GradedRing> ring_ptr() const { return ring_; }
  const AddGroup& group() const { return ag_; }
  uint32_t rank() const { return ag_.rank(); }
  uint32_t size() const { return ag_.size(); }

  uint32_t add(uint32_t a, uint32_t b) const { return ag_.add(a, b); }
  uint32_t neg(uint32_t a) const { return ag_.neg(a); }
  // Action of ring element a on module element m.
  uint32_t act(uint32_t a, uint32_t m) const;
  uint32_t basis_action(uint32_t i, uint32_t j) const { return act_idx_[i * rank() + j]; }

  uint32_t degree_of_basis(uint32_t j) const { return degree_[j]; }
  uint32_t part(uint32_t x, uint32_t g) const;
  bool is_homogeneous(uint32_t x) const;
  std::optional<uint32_t> degree_of(uint32_t x) const;
  const std::vector<uint32_t>& component(uint32_t g) const { return comp_[g]; }
  const std::vector<uint32_t>& component_basis(uint32_t g) const { return comp_basis_[g]; }
  const std::vector<uint32_t>& homogeneous_elements() const { return homog_; }

 private:
  void build_components();
  void validate() const;

  std::shared_ptr<const GradedRing> ring_;
  AddGroup ag_;
  std::vector<uint32_t> act_flat_;  // (i*km + j)*km + l
  std::vector<uint32_t> act_idx_;
  std::vector<uint32_t> degree_;
  std::vector<std::vector<uint32_t>> comp_;
  std::vector<std::vector<uint32_t>> comp_basis_;
  std::vector<uint32_t> homog_;
};

// M_g as a module over the subring A_e, materialized as a trivially graded
// structure so that every substructure/classifier routine applies unchanged.
struct ComponentView {
  std::shared_ptr<const GradedRing> ring;     // A_e, trivially graded
  std::shared_ptr<const GradedModule> module; // M_g over A_e
  std::vector<uint32_t> ring_embed;           // A_e element -> parent ring element
  std::vector<uint32_t> mod_embed;            // M_g element -> parent module element
};

ComponentView make_component_view(const GradedRing& parent_ring,
                                  const GradedModule& parent_module, uint32_t g);

}  // namespace gralab

#pragma once

#include <map>
#include <memory>
#include <optional>

#include "gralab/hom.hpp"
#include "gralab/verdict.hpp"

namespace gralab {

struct Caps {
  uint64_t ambient = AddGroup::kDefaultAmbientCap;
  uint64_t lattice = 20000;
};

// One structure under study (graded ring + graded module) together with every
// cached derived object: lattices, colon sets, component views, quotient and
// submodule presentations, verdict memos. Not thread-safe; corpus runners use
// one context per worker.
class StructCtx {
 public:
  StructCtx(std::string name, std::shared_ptr<const GradedRing> ring,
            std::shared_ptr<const GradedModule> module, Caps caps = {});

  const std::string& name() const { return name_; }
  const Caps& caps() const { return caps_; }
  const GradedRing& A() const { return *ring_; }
  const GradedModule& M() const { return *module_; }
  std::shared_ptr<const GradedRing> ring_ptr() const { return ring_; }
  std::shared_ptr<const GradedModule> module_ptr() const { return module_; }

  const Lattice& graded_submodules();
  const Lattice& graded_left_ideals();
  const Lattice& graded_two_sided_ideals();
  const Lattice& all_two_sided_ideals();
  const Lattice& all_submodules();

  int whole_index() { return int(graded_submodules().items.size()) - 1; }
  // Index of a membership set in the graded submodule lattice, -1 if absent.
  int submodule_index(const DenseSet& s) { return graded_submodules().index_of(s); }

  // Additive generators of M (the basis elements).
  const std::vector<uint32_t>& module_addgens();

  const DenseSet& colon_km(int k);                    // (K :_A M)
  const std::vector<uint32_t>& colon_km_gens(int k);  // small additive gens
  const DenseSet& colon_kl(int k, int l);             // (K :_A L)
  const DenseSet& ann_l(int l);                       // Ann_A(L)
  const DenseSet& ann_module();                       // Ann_A(M)

  // Ring basis elements (the default middle set for sandwich scans).
  const std::vector<uint32_t>& ring_basis_elems();

  // x*y*z, x*z, y*z over (x,y in h(A), z in h(M)), flattened with z fastest.
  struct TripleTable {
    std::vector<uint32_t> xyz, xz, yz;
  };
  const TripleTable& completely_triples();

  // x*b_i*y for x,y in h(A) and b_i the ring basis, flattened with i fastest.
  // This is the streamed generating set of x*A*y used by every sandwich scan.
  const std::vector<uint32_t>& sandwich_products();

  struct Component {
    ComponentView view;
    std::unique_ptr<StructCtx> ctx;  // M_g over A_e, trivially graded
    // addgens of each comp lattice item, embedded into the parent spaces
    std::vector<std::vector<uint32_t>> sub_embgens;    // per comp submodule
    std::vector<std::vector<uint32_t>> ideal_embgens;  // per comp two-sided ideal
    std::vector<uint32_t> ring_elems;                  // embedded A_e elements, ascending
    std::vector<uint32_t> ring_basis_embedded;         // embedded A_e basis elements
  };
  Component& component(uint32_t g);

  struct Quotient {
    std::unique_ptr<StructCtx> ctx;
    SubquotientPresentation pres;
    std::unique_ptr<GradedHom> projection;
  };
  Quotient& quotient(int t_idx);

  struct SubAsModule {
    std::unique_ptr<StructCtx> ctx;
    SubquotientPresentation pres;
    std::unique_ptr<GradedHom> inclusion;
  };
  SubAsModule& submodule_module(int k_idx);

  // M x M over the same ring, or nullptr when the product would exceed
  // `cap_elements`.
  StructCtx* product_self(uint64_t cap_elements);

  // Shared memoization slots used by the classify layer.
  std::map<std::tuple<int, int, int>, Verdict> verdict_memo;
  std::map<int, std::optional<TripleZero>> triple_zero_memo;
  std::optional<Verdict> duo_memo;

 private:
  std::string name_;
  std::shared_ptr<const GradedRing> ring_;
  std::shared_ptr<const GradedModule> module_;
  Caps caps_;

  std::optional<Lattice> graded_subs_, graded_left_, graded_two_, all_two_, all_subs_;
  std::vector<uint32_t> module_addgens_, ring_basis_;
  std::map<int, DenseSet> colon_km_;
  std::map<int, std::vector<uint32_t>> colon_km_gens_;
  std::map<std::pair<int, int>, DenseSet> colon_kl_;
  std::map<int, DenseSet> ann_l_;
  std::optional<DenseSet> ann_module_;
  std::optional<TripleTable> triples_;
  std::vector<uint32_t> sandwich_;
  std::map<uint32_t, Component> components_;
  std::map<int, Quotient> quotients_;
  std::map<int, SubAsModule> submodules_;
  std::optional<std::unique_ptr<StructCtx>> product_self_;
};

}  // namespace gralab

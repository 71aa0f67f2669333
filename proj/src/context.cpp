#include "gralab/context.hpp"

namespace gralab {

StructCtx::StructCtx(std::string name, std::shared_ptr<const GradedRing> ring,
                     std::shared_ptr<const GradedModule> module, Caps caps)
    : name_(std::move(name)), ring_(std::move(ring)), module_(std::move(module)),
      caps_(caps) {}

const Lattice& StructCtx::graded_submodules() {
  if (!graded_subs_) graded_subs_ = enumerate_graded_submodules(*module_, caps_.lattice);
  return *graded_subs_;
}

const Lattice& StructCtx::graded_left_ideals() {
  if (!graded_left_) graded_left_ = enumerate_graded_left_ideals(*ring_, caps_.lattice);
  return *graded_left_;
}

const Lattice& StructCtx::graded_two_sided_ideals() {
  if (!graded_two_)
    graded_two_ = enumerate_graded_two_sided_ideals(*ring_, caps_.lattice);
  return *graded_two_;
}

const Lattice& StructCtx::all_two_sided_ideals() {
  if (!all_two_) all_two_ = enumerate_all_two_sided_ideals(ring_->ring(), caps_.lattice);
  return *all_two_;
}

const Lattice& StructCtx::all_submodules() {
  if (!all_subs_) all_subs_ = enumerate_all_submodules(*module_, caps_.lattice);
  return *all_subs_;
}

const std::vector<uint32_t>& StructCtx::module_addgens() {
  if (module_addgens_.empty() && module_->rank() > 0) {
    for (uint32_t j = 0; j < module_->rank(); ++j)
      module_addgens_.push_back(module_->group().basis_element(j));
  }
  return module_addgens_;
}

const std::vector<uint32_t>& StructCtx::ring_basis_elems() {
  if (ring_basis_.empty()) {
    for (uint32_t i = 0; i < ring_->ring().rank(); ++i)
      ring_basis_.push_back(ring_->ring().group().basis_element(i));
  }
  return ring_basis_;
}

const DenseSet& StructCtx::colon_km(int k) {
  auto it = colon_km_.find(k);
  if (it == colon_km_.end()) {
    const Substructure& K = graded_submodules().items[size_t(k)];
    it = colon_km_.emplace(k, colon_in_ring(*module_, K.set, module_addgens())).first;
  }
  return it->second;
}

const std::vector<uint32_t>& StructCtx::colon_km_gens(int k) {
  auto it = colon_km_gens_.find(k);
  if (it == colon_km_gens_.end()) {
    std::vector<uint32_t> members = colon_km(k).to_list();
    it = colon_km_gens_.emplace(k, extract_addgens(ring_->ring().group(), members)).first;
  }
  return it->second;
}

const DenseSet& StructCtx::colon_kl(int k, int l) {
  auto key = std::make_pair(k, l);
  auto it = colon_kl_.find(key);
  if (it == colon_kl_.end()) {
    const Lattice& lat = graded_submodules();
    it = colon_kl_
             .emplace(key, colon_in_ring(*module_, lat.items[size_t(k)].set,
                                         lat.items[size_t(l)].addgens))
             .first;
  }
  return it->second;
}

const DenseSet& StructCtx::ann_l(int l) {
  auto it = ann_l_.find(l);
  if (it == ann_l_.end()) {
    const Lattice& lat = graded_submodules();
    it = ann_l_.emplace(l, annihilator_in_ring(*module_, lat.items[size_t(l)].addgens))
             .first;
  }
  return it->second;
}

const DenseSet& StructCtx::ann_module() {
  if (!ann_module_) ann_module_ = annihilator_in_ring(*module_, module_addgens());
  return *ann_module_;
}

const StructCtx::TripleTable& StructCtx::completely_triples() {
  if (triples_) return *triples_;
  TripleTable t;
  const auto& ha = ring_->homogeneous_elements();
  const auto& hm = module_->homogeneous_elements();
  const FiniteRing& r = ring_->ring();
  size_t na = ha.size(), nm = hm.size();
  t.xyz.resize(na * na * nm);
  t.xz.resize(na * nm);
  t.yz.resize(na * nm);
  for (size_t i = 0; i < na; ++i)
    for (size_t zi = 0; zi < nm; ++zi)
      t.xz[i * nm + zi] = module_->act(ha[i], hm[zi]);
  t.yz = t.xz;
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) {
      uint32_t xy = r.mul(ha[i], ha[j]);
      for (size_t zi = 0; zi < nm; ++zi)
        t.xyz[(i * na + j) * nm + zi] = module_->act(xy, hm[zi]);
    }
  triples_ = std::move(t);
  return *triples_;
}

const std::vector<uint32_t>& StructCtx::sandwich_products() {
  if (!sandwich_.empty() || ring_->ring().rank() == 0) return sandwich_;
  const auto& ha = ring_->homogeneous_elements();
  const FiniteRing& r = ring_->ring();
  uint32_t k = r.rank();
  size_t na = ha.size();
  sandwich_.resize(na * na * k);
  std::vector<uint32_t> xb(k);
  for (size_t xi = 0; xi < na; ++xi) {
    for (uint32_t i = 0; i < k; ++i) xb[i] = r.mul(ha[xi], r.group().basis_element(i));
    for (size_t yi = 0; yi < na; ++yi)
      for (uint32_t i = 0; i < k; ++i)
        sandwich_[(xi * na + yi) * k + i] = r.mul(xb[i], ha[yi]);
  }
  return sandwich_;
}

StructCtx::Component& StructCtx::component(uint32_t g) {
  auto it = components_.find(g);
  if (it != components_.end()) return it->second;
  Component comp;
  comp.view = make_component_view(*ring_, *module_, g);
  comp.ctx = std::make_unique<StructCtx>(
      name_ + "/component-" + std::to_string(g),
      comp.view.ring, comp.view.module, caps_);
  const Lattice& subs = comp.ctx->graded_submodules();
  for (const Substructure& s : subs.items) {
    std::vector<uint32_t> emb;
    for (uint32_t x : s.addgens) emb.push_back(comp.view.mod_embed[x]);
    comp.sub_embgens.push_back(std::move(emb));
  }
  const Lattice& ideals = comp.ctx->graded_two_sided_ideals();
  for (const Substructure& s : ideals.items) {
    std::vector<uint32_t> emb;
    for (uint32_t x : s.addgens) emb.push_back(comp.view.ring_embed[x]);
    comp.ideal_embgens.push_back(std::move(emb));
  }
  comp.ring_elems = comp.view.ring_embed;
  std::sort(comp.ring_elems.begin(), comp.ring_elems.end());
  for (uint32_t i = 0; i < comp.view.ring->ring().rank(); ++i)
    comp.ring_basis_embedded.push_back(
        comp.view.ring_embed[comp.view.ring->ring().group().basis_element(i)]);
  return components_.emplace(g, std::move(comp)).first->second;
}

StructCtx::Quotient& StructCtx::quotient(int t_idx) {
  auto it = quotients_.find(t_idx);
  if (it != quotients_.end()) return it->second;
  const Substructure& t = graded_submodules().items[size_t(t_idx)];
  QuotientModule q = quotient_module(module_, t);
  Quotient out;
  out.pres = std::move(q.pres);
  out.projection = std::make_unique<GradedHom>(std::move(q.projection));
  out.ctx = std::make_unique<StructCtx>(name_ + "/quot-" + std::to_string(t_idx),
                                        ring_, out.pres.module, caps_);
  return quotients_.emplace(t_idx, std::move(out)).first->second;
}

StructCtx* StructCtx::product_self(uint64_t cap_elements) {
  if (!product_self_) {
    uint64_t n = uint64_t(module_->size()) * module_->size();
    if (module_->size() <= 1 || n > cap_elements) {
      product_self_ = nullptr;
    } else {
      auto prod = GradedModule::direct_product(module_, module_, caps_.ambient);
      product_self_ =
          std::make_unique<StructCtx>(name_ + "/product", ring_, prod, caps_);
    }
  }
  return product_self_->get();
}

StructCtx::SubAsModule& StructCtx::submodule_module(int k_idx) {
  auto it = submodules_.find(k_idx);
  if (it != submodules_.end()) return it->second;
  const Substructure& k = graded_submodules().items[size_t(k_idx)];
  SubmoduleModule s = submodule_as_module(module_, k);
  SubAsModule out;
  out.pres = std::move(s.pres);
  out.inclusion = std::make_unique<GradedHom>(std::move(s.inclusion));
  out.ctx = std::make_unique<StructCtx>(name_ + "/sub-" + std::to_string(k_idx),
                                        ring_, out.pres.module, caps_);
  return submodules_.emplace(k_idx, std::move(out)).first->second;
}

}  // namespace gralab

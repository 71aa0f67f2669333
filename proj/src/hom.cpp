#include "gralab/hom.hpp"

#include <algorithm>

#include "gralab/smith.hpp"

namespace gralab {

GradedHom::GradedHom(std::shared_ptr<const GradedModule> source,
                     std::shared_ptr<const GradedModule> target,
                     std::vector<uint32_t> basis_images)
    : src_(std::move(source)), dst_(std::move(target)), images_(std::move(basis_images)) {
  if (src_->ring_ptr().get() != dst_->ring_ptr().get())
    throw ValidationError("graded homomorphism requires a common graded ring");
  if (images_.size() != src_->rank())
    throw ValidationError("graded homomorphism needs one image per source basis generator");
  validate();
}

void GradedHom::validate() const {
  const AddGroup& sg = src_->group();
  const AddGroup& dg = dst_->group();
  for (uint32_t j = 0; j < src_->rank(); ++j) {
    if (images_[j] >= dg.size()) throw ValidationError("basis image out of range");
    if (dg.scale(sg.order(j), images_[j]) != 0)
      throw ValidationError("image of basis generator " + std::to_string(j) +
                            " violates its additive order");
    uint32_t g = src_->degree_of_basis(j);
    if (dst_->part(images_[j], g) != images_[j])
      throw ValidationError("homomorphism not degree-preserving on basis generator " +
                            std::to_string(j));
  }
  const FiniteRing& r = src_->ring().ring();
  for (uint32_t i = 0; i < r.rank(); ++i)
    for (uint32_t j = 0; j < src_->rank(); ++j) {
      uint32_t lhs = apply(src_->basis_action(i, j));
      uint32_t rhs = dst_->act(r.group().basis_element(i), images_[j]);
      if (lhs != rhs)
        throw ValidationError("homomorphism not A-linear at basis pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

uint32_t GradedHom::apply(uint32_t x) const {
  const AddGroup& sg = src_->group();
  const AddGroup& dg = dst_->group();
  uint32_t r = 0;
  for (uint32_t j = 0; j < sg.rank(); ++j) {
    uint32_t d = sg.digit(j, x);
    if (d) r = dg.add(r, dg.scale(d, images_[j]));
  }
  return r;
}

bool GradedHom::injective() const {
  DenseSet seen(dst_->size());
  for (uint32_t x = 0; x < src_->size(); ++x) {
    uint32_t y = apply(x);
    if (seen.test(y)) return false;
    seen.set(y);
  }
  return true;
}

bool GradedHom::surjective() const {
  DenseSet seen(dst_->size());
  size_t c = 0;
  for (uint32_t x = 0; x < src_->size(); ++x) {
    uint32_t y = apply(x);
    if (!seen.test(y)) {
      seen.set(y);
      ++c;
    }
  }
  return c == dst_->size();
}

Substructure kernel(const GradedHom& f) {
  std::vector<uint32_t> members;
  for (uint32_t x = 0; x < f.source().size(); ++x)
    if (f.apply(x) == 0) members.push_back(x);
  Substructure s;
  s.kind = SubKind::Submodule;
  s.set = DenseSet(f.source().size());
  for (uint32_t x : members) s.set.set(x);
  s.members = std::move(members);
  s.addgens = extract_addgens(f.source().group(), s.members);
  s.seeds = s.addgens;
  if (!is_graded(f.source(), s))
    throw std::logic_error("kernel of a graded homomorphism must be graded");
  return s;
}

Substructure hom_image(const GradedHom& f, const Substructure& k) {
  Substructure s;
  s.kind = SubKind::Submodule;
  s.set = DenseSet(f.target().size());
  for (uint32_t x : k.members) s.set.set(f.apply(x));
  s.members = s.set.to_list();
  s.addgens.clear();
  for (uint32_t g : k.addgens) s.addgens.push_back(f.apply(g));
  s.seeds = s.addgens;
  if (!is_graded(f.target(), s))
    throw std::logic_error("image of a graded submodule must be graded");
  return s;
}

Substructure hom_preimage(const GradedHom& f, const Substructure& k) {
  Substructure s;
  s.kind = SubKind::Submodule;
  s.set = DenseSet(f.source().size());
  std::vector<uint32_t> members;
  for (uint32_t x = 0; x < f.source().size(); ++x)
    if (k.set.test(f.apply(x))) {
      s.set.set(x);
      members.push_back(x);
    }
  s.members = std::move(members);
  s.addgens = extract_addgens(f.source().group(), s.members);
  s.seeds = s.addgens;
  if (!is_graded(f.source(), s))
    throw std::logic_error("preimage of a graded submodule must be graded");
  return s;
}

SubquotientPresentation present_subquotient(const GradedModule& m,
                                            const Substructure& k,
                                            const Substructure& t) {
  if (!t.set.subset_of(k.set))
    throw ValidationError("subquotient requires T <= K");
  if (!is_graded(m, k) || !is_graded(m, t))
    throw ValidationError("subquotient requires graded submodules");

  const AddGroup& mg = m.group();
  uint32_t ng = m.ring().grading_group().size();

  // Per degree, decompose (K intersect M_g)/(T intersect M_g) in the
  // coordinates of the degree-g sub-basis.
  struct NewGen {
    uint32_t order;
    uint32_t degree;
    uint32_t rep;  // element of M
  };
  std::vector<NewGen> gens;
  for (uint32_t g = 0; g < ng; ++g) {
    const std::vector<uint32_t>& basis = m.component_basis(g);
    if (basis.empty()) continue;
    std::vector<uint32_t> sub_orders;
    for (uint32_t b : basis) sub_orders.push_back(mg.order(b));
    auto project = [&](uint32_t x) {
      std::vector<uint32_t> c(basis.size());
      for (size_t i = 0; i < basis.size(); ++i) c[i] = mg.digit(basis[i], x);
      return c;
    };
    auto lift = [&](const std::vector<uint32_t>& c) {
      uint32_t x = 0;
      for (size_t i = 0; i < basis.size(); ++i) x += c[i] * mg.stride(basis[i]);
      return x;
    };
    std::vector<std::vector<uint32_t>> kg, tg;
    for (uint32_t x : k.members)
      if (m.part(x, g) == x) kg.push_back(project(x));
    for (uint32_t x : t.members)
      if (m.part(x, g) == x) tg.push_back(project(x));
    CyclicDecomposition dec = cyclic_decomposition(sub_orders, kg, tg);
    for (size_t i = 0; i < dec.orders.size(); ++i)
      gens.push_back({dec.orders[i], g, lift(dec.gens[i])});
  }

  SubquotientPresentation out;
  Coords orders;
  std::vector<uint32_t> degrees;
  for (const NewGen& ge : gens) {
    orders.push_back(ge.order);
    degrees.push_back(ge.degree);
    out.basis_reps.push_back(ge.rep);
  }

  AddGroup qg(orders);
  out.to_new.assign(m.size(), -1);
  out.rep_of.assign(qg.size(), 0);
  std::vector<bool> have_rep(qg.size(), false);
  size_t filled = 0;
  for (uint32_t q = 0; q < qg.size(); ++q) {
    uint32_t rep = 0;
    for (uint32_t j = 0; j < qg.rank(); ++j) {
      uint32_t d = qg.digit(j, q);
      if (d) rep = mg.add(rep, mg.scale(d, out.basis_reps[j]));
    }
    for (uint32_t tt : t.members) {
      uint32_t x = mg.add(rep, tt);
      if (out.to_new[x] != -1)
        throw std::logic_error("subquotient cosets overlap; presentation is broken");
      out.to_new[x] = q;
      ++filled;
    }
  }
  if (filled != k.members.size())
    throw std::logic_error("subquotient presentation does not cover K");
  for (uint32_t x : k.members) {
    uint32_t q = uint32_t(out.to_new[x]);
    if (!have_rep[q]) {
      have_rep[q] = true;
      out.rep_of[q] = x;  // members ascend, first hit is the lex-least rep
    }
  }

  const FiniteRing& r = m.ring().ring();
  std::vector<Coords> action(size_t(r.rank()) * qg.rank());
  for (uint32_t i = 0; i < r.rank(); ++i)
    for (uint32_t j = 0; j < qg.rank(); ++j) {
      uint32_t y = m.act(r.group().basis_element(i), out.basis_reps[j]);
      action[i * qg.rank() + j] = qg.decode(uint32_t(out.to_new[y]));
    }
  out.module = std::make_shared<GradedModule>(m.ring_ptr(), orders, std::move(action),
                                              std::move(degrees));
  return out;
}

QuotientModule quotient_module(const std::shared_ptr<const GradedModule>& m,
                               const Substructure& t) {
  Substructure whole;
  whole.kind = SubKind::Submodule;
  whole.set = DenseSet(m->size());
  whole.members.resize(m->size());
  for (uint32_t x = 0; x < m->size(); ++x) {
    whole.set.set(x);
    whole.members[x] = x;
  }
  for (uint32_t j = 0; j < m->rank(); ++j)
    whole.addgens.push_back(m->group().basis_element(j));
  whole.seeds = whole.addgens;

  SubquotientPresentation pres = present_subquotient(*m, whole, t);
  std::vector<uint32_t> images;
  for (uint32_t j = 0; j < m->rank(); ++j)
    images.push_back(uint32_t(pres.to_new[m->group().basis_element(j)]));
  GradedHom proj(m, pres.module, std::move(images));
  return {std::move(pres), std::move(proj)};
}

SubmoduleModule submodule_as_module(const std::shared_ptr<const GradedModule>& m,
                                    const Substructure& k) {
  Substructure zero;
  zero.kind = SubKind::Submodule;
  zero.set = DenseSet(m->size());
  zero.set.set(0);
  zero.members = {0};

  SubquotientPresentation pres = present_subquotient(*m, k, zero);
  std::vector<uint32_t> images = pres.basis_reps;
  GradedHom incl(pres.module, m, std::move(images));
  return {std::move(pres), std::move(incl)};
}

}  // namespace gralab

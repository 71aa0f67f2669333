#include "gralab/graded.hpp"

#include <algorithm>

namespace gralab {

namespace {

// Enumerate the component spanned by the basis generators in `basis_idx`:
// all elements whose digits vanish outside those positions.
std::vector<uint32_t> span_of_basis(const AddGroup& ag,
                                    const std::vector<uint32_t>& basis_idx) {
  std::vector<uint32_t> out{0};
  for (uint32_t i : basis_idx) {
    std::vector<uint32_t> next;
    next.reserve(out.size() * ag.order(i));
    for (uint32_t d = 0; d < ag.order(i); ++d)
      for (uint32_t x : out) next.push_back(x + d * ag.stride(i));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Part>
uint32_t masked_part(const AddGroup& ag, const std::vector<uint32_t>& degree,
                     uint32_t x, uint32_t g, Part) {
  uint32_t r = 0;
  for (uint32_t i = 0; i < ag.rank(); ++i)
    if (degree[i] == g) r += uint32_t(ag.digit(i, x)) * ag.stride(i);
  return r;
}

}  // namespace

GradedRing::GradedRing(FiniteRing ring, FiniteGroup grp, std::vector<uint32_t> degree)
    : ring_(std::move(ring)), grp_(std::move(grp)), degree_(std::move(degree)) {
  if (degree_.size() != ring_.rank())
    throw ValidationError("degree map must cover every basis generator");
  for (uint32_t d : degree_)
    if (d >= grp_.size()) throw ValidationError("degree out of range");
  build_components();
  validate();
}

GradedRing GradedRing::trivial(FiniteRing ring) {
  std::vector<uint32_t> deg(ring.rank(), 0);
  return GradedRing(std::move(ring), FiniteGroup::cyclic(1), std::move(deg));
}

GradedRing GradedRing::good_matrix_grading(FiniteRing matrix_ring, uint32_t mat_size,
                                           FiniteGroup grp,
                                           const std::vector<uint32_t>& sigma) {
  if (sigma.size() != mat_size)
    throw ValidationError("sigma must have one group element per matrix row");
  uint32_t rk = matrix_ring.rank();
  if (rk % (mat_size * mat_size) != 0)
    throw ValidationError("ring rank does not match matrix layout");
  uint32_t kb = rk / (mat_size * mat_size);
  std::vector<uint32_t> deg(rk);
  for (uint32_t p = 0; p < mat_size; ++p)
    for (uint32_t q = 0; q < mat_size; ++q)
      for (uint32_t t = 0; t < kb; ++t)
        deg[(p * mat_size + q) * kb + t] = grp.mul(sigma[p], grp.inv(sigma[q]));
  return GradedRing(std::move(matrix_ring), std::move(grp), std::move(deg));
}

void GradedRing::build_components() {
  comp_basis_.assign(grp_.size(), {});
  for (uint32_t i = 0; i < ring_.rank(); ++i) comp_basis_[degree_[i]].push_back(i);
  comp_.resize(grp_.size());
  for (uint32_t g = 0; g < grp_.size(); ++g)
    comp_[g] = span_of_basis(ring_.group(), comp_basis_[g]);
  homog_.clear();
  for (const auto& c : comp_) homog_.insert(homog_.end(), c.begin(), c.end());
  std::sort(homog_.begin(), homog_.end());
  homog_.erase(std::unique(homog_.begin(), homog_.end()), homog_.end());
}

void GradedRing::validate() const {
  uint32_t k = ring_.rank();
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j) {
      uint32_t p = ring_.basis_product(i, j);
      uint32_t g = grp_.mul(degree_[i], degree_[j]);
      if (part(p, g) != p)
        throw ValidationError("grading violated: product of basis pair (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ") is not homogeneous of the required degree");
    }
  uint32_t one = ring_.one();
  if (part(one, grp_.identity()) != one)
    throw ValidationError("unity does not lie in the identity component");
}

uint32_t GradedRing::part(uint32_t x, uint32_t g) const {
  return masked_part(ring_.group(), degree_, x, g, 0);
}

bool GradedRing::is_homogeneous(uint32_t x) const {
  return degree_of(x).has_value() || x == 0;
}

std::optional<uint32_t> GradedRing::degree_of(uint32_t x) const {
  std::optional<uint32_t> deg;
  const AddGroup& ag = ring_.group();
  for (uint32_t i = 0; i < ag.rank(); ++i)
    if (ag.digit(i, x)) {
      if (deg && *deg != degree_[i]) return std::nullopt;
      deg = degree_[i];
    }
  return deg;
}

GradedModule::GradedModule(std::shared_ptr<const GradedRing> ring, Coords orders,
                           std::vector<Coords> action_constants,
                           std::vector<uint32_t> degree, uint64_t cap)
    : ring_(std::move(ring)), ag_(std::move(orders), cap), degree_(std::move(degree)) {
  uint32_t kr = ring_->ring().rank();
  uint32_t km = ag_.rank();
  if (action_constants.size() != size_t(kr) * km)
    throw ValidationError("action constant table must have ring_rank*module_rank entries");
  if (degree_.size() != km)
    throw ValidationError("module degree map must cover every basis generator");
  for (uint32_t d : degree_)
    if (d >= ring_->grading_group().size())
      throw ValidationError("module degree out of range");
  act_flat_.assign(size_t(kr) * km * km, 0);
  act_idx_.assign(size_t(kr) * km, 0);
  for (uint32_t i = 0; i < kr; ++i)
    for (uint32_t j = 0; j < km; ++j) {
      const Coords& v = action_constants[i * km + j];
      if (v.size() != km) throw ValidationError("action constant has wrong length");
      for (uint32_t l = 0; l < km; ++l)
        act_flat_[(size_t(i) * km + j) * km + l] = v[l] % ag_.order(l);
      act_idx_[i * km + j] =
          ag_.encode(std::span<const uint32_t>(&act_flat_[(size_t(i) * km + j) * km], km));
    }
  build_components();
  validate();
}

uint32_t GradedModule::act(uint32_t a, uint32_t m) const {
  uint32_t kr = ring_->ring().rank();
  uint32_t km = ag_.rank();
  const AddGroup& rg = ring_->ring().group();
  uint64_t acc[32] = {0};
  for (uint32_t i = 0; i < kr; ++i) {
    uint64_t da = rg.digit(i, a);
    if (!da) continue;
    for (uint32_t j = 0; j < km; ++j) {
      uint64_t dm = ag_.digit(j, m);
      if (!dm) continue;
      uint64_t c = da * dm;
      const uint32_t* v = &act_flat_[(size_t(i) * km + j) * km];
      for (uint32_t l = 0; l < km; ++l) acc[l] += c * v[l];
    }
  }
  uint32_t r = 0;
  for (uint32_t l = 0; l < km; ++l)
    r += uint32_t(acc[l] % ag_.order(l)) * ag_.stride(l);
  return r;
}

std::shared_ptr<GradedModule> GradedModule::regular(std::shared_ptr<const GradedRing> ring) {
  const FiniteRing& r = ring->ring();
  uint32_t k = r.rank();
  Coords orders = r.group().orders();
  std::vector<Coords> action(size_t(k) * k);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j)
      action[i * k + j] = r.group().decode(r.basis_product(i, j));
  std::vector<uint32_t> deg(k);
  for (uint32_t j = 0; j < k; ++j) deg[j] = ring->degree_of_basis(j);
  return std::make_shared<GradedModule>(ring, std::move(orders), std::move(action),
                                        std::move(deg));
}

std::shared_ptr<GradedModule> GradedModule::direct_product(
    const std::shared_ptr<const GradedModule>& m,
    const std::shared_ptr<const GradedModule>& s, uint64_t cap) {
  if (m->ring_ptr().get() != s->ring_ptr().get())
    throw ValidationError("direct product requires modules over the same graded ring");
  uint32_t kr = m->ring().ring().rank();
  uint32_t km = m->rank(), ks = s->rank();
  Coords orders;
  for (uint32_t j = 0; j < km; ++j) orders.push_back(m->group().order(j));
  for (uint32_t j = 0; j < ks; ++j) orders.push_back(s->group().order(j));
  std::vector<Coords> action(size_t(kr) * (km + ks), Coords(km + ks, 0));
  for (uint32_t i = 0; i < kr; ++i) {
    for (uint32_t j = 0; j < km; ++j) {
      Coords v = m->group().decode(m->basis_action(i, j));
      for (uint32_t l = 0; l < km; ++l) action[i * (km + ks) + j][l] = v[l];
    }
    for (uint32_t j = 0; j < ks; ++j) {
      Coords v = s->group().decode(s->basis_action(i, j));
      for (uint32_t l = 0; l < ks; ++l) action[i * (km + ks) + km + j][km + l] = v[l];
    }
  }
  std::vector<uint32_t> deg;
  for (uint32_t j = 0; j < km; ++j) deg.push_back(m->degree_of_basis(j));
  for (uint32_t j = 0; j < ks; ++j) deg.push_back(s->degree_of_basis(j));
  return std::make_shared<GradedModule>(m->ring_ptr(), std::move(orders),
                                        std::move(action), std::move(deg), cap);
}

void GradedModule::build_components() {
  uint32_t ng = ring_->grading_group().size();
  comp_basis_.assign(ng, {});
  for (uint32_t j = 0; j < ag_.rank(); ++j) comp_basis_[degree_[j]].push_back(j);
  comp_.resize(ng);
  for (uint32_t g = 0; g < ng; ++g) comp_[g] = span_of_basis(ag_, comp_basis_[g]);
  homog_.clear();
  for (const auto& c : comp_) homog_.insert(homog_.end(), c.begin(), c.end());
  std::sort(homog_.begin(), homog_.end());
  homog_.erase(std::unique(homog_.begin(), homog_.end()), homog_.end());
}

void GradedModule::validate() const {
  const FiniteRing& r = ring_->ring();
  const FiniteGroup& grp = ring_->grading_group();
  uint32_t kr = r.rank(), km = ag_.rank();
  for (uint32_t i = 0; i < kr; ++i)
    for (uint32_t j = 0; j < km; ++j) {
      uint32_t p = basis_action(i, j);
      for (uint32_t l = 0; l < km; ++l) {
        uint64_t d = ag_.digit(l, p);
        if ((d * r.group().order(i)) % ag_.order(l) != 0 ||
            (d * ag_.order(j)) % ag_.order(l) != 0)
          throw ValidationError("action constants incompatible with additive orders at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
      uint32_t g = grp.mul(ring_->degree_of_basis(i), degree_[j]);
      if (part(p, g) != p)
        throw ValidationError("module grading violated at basis pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (uint32_t i = 0; i < kr; ++i)
    for (uint32_t j = 0; j < kr; ++j)
      for (uint32_t l = 0; l < km; ++l) {
        uint32_t lhs = act(r.basis_product(i, j), ag_.basis_element(l));
        uint32_t rhs = act(r.group().basis_element(i), basis_action(j, l));
        if (lhs != rhs)
          throw ValidationError("module action not associative on basis triple (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(l) + ")");
      }
  for (uint32_t l = 0; l < km; ++l) {
    uint32_t b = ag_.basis_element(l);
    if (act(r.one(), b) != b)
      throw ValidationError("module not unital on basis generator " + std::to_string(l));
  }
}

uint32_t GradedModule::part(uint32_t x, uint32_t g) const {
  return masked_part(ag_, degree_, x, g, 0);
}

bool GradedModule::is_homogeneous(uint32_t x) const {
  return degree_of(x).has_value() || x == 0;
}

std::optional<uint32_t> GradedModule::degree_of(uint32_t x) const {
  std::optional<uint32_t> deg;
  for (uint32_t j = 0; j < ag_.rank(); ++j)
    if (ag_.digit(j, x)) {
      if (deg && *deg != degree_[j]) return std::nullopt;
      deg = degree_[j];
    }
  return deg;
}

ComponentView make_component_view(const GradedRing& parent_ring,
                                  const GradedModule& parent_module, uint32_t g) {
  const FiniteGroup& grp = parent_ring.grading_group();
  uint32_t e = grp.identity();
  const AddGroup& rg = parent_ring.ring().group();

  const std::vector<uint32_t>& rbasis = parent_ring.component_basis(e);
  uint32_t kr = uint32_t(rbasis.size());
  Coords rorders(kr);
  for (uint32_t i = 0; i < kr; ++i) rorders[i] = rg.order(rbasis[i]);

  auto to_sub_ring = [&](uint32_t parent_elem) {
    Coords c(kr);
    for (uint32_t i = 0; i < kr; ++i) c[i] = rg.digit(rbasis[i], parent_elem);
    return c;
  };

  std::vector<Coords> sc(size_t(kr) * kr);
  for (uint32_t i = 0; i < kr; ++i)
    for (uint32_t j = 0; j < kr; ++j)
      sc[i * kr + j] = to_sub_ring(parent_ring.ring().basis_product(rbasis[i], rbasis[j]));
  FiniteRing sub(rorders, std::move(sc), to_sub_ring(parent_ring.ring().one()));
  sub.validate();

  ComponentView view;
  view.ring = std::make_shared<GradedRing>(GradedRing::trivial(std::move(sub)));

  const AddGroup& mg = parent_module.group();
  const std::vector<uint32_t>& mbasis = parent_module.component_basis(g);
  uint32_t km = uint32_t(mbasis.size());
  Coords morders(km);
  for (uint32_t j = 0; j < km; ++j) morders[j] = mg.order(mbasis[j]);
  auto to_sub_mod = [&](uint32_t parent_elem) {
    Coords c(km);
    for (uint32_t j = 0; j < km; ++j) c[j] = mg.digit(mbasis[j], parent_elem);
    return c;
  };
  std::vector<Coords> action(size_t(kr) * km);
  for (uint32_t i = 0; i < kr; ++i)
    for (uint32_t j = 0; j < km; ++j)
      action[i * km + j] = to_sub_mod(parent_module.basis_action(rbasis[i], mbasis[j]));
  view.module = std::make_shared<GradedModule>(view.ring, morders, std::move(action),
                                               std::vector<uint32_t>(km, 0));

  view.ring_embed.resize(view.ring->ring().size());
  for (uint32_t x = 0; x < view.ring->ring().size(); ++x) {
    uint32_t p = 0;
    for (uint32_t i = 0; i < kr; ++i)
      p += uint32_t(view.ring->ring().group().digit(i, x)) * rg.stride(rbasis[i]);
    view.ring_embed[x] = p;
  }
  view.mod_embed.resize(view.module->size());
  for (uint32_t x = 0; x < view.module->size(); ++x) {
    uint32_t p = 0;
    for (uint32_t j = 0; j < km; ++j)
      p += uint32_t(view.module->group().digit(j, x)) * mg.stride(mbasis[j]);
    view.mod_embed[x] = p;
  }
  return view;
}

}  // namespace gralab

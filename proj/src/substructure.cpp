#include "gralab/substructure.hpp"

#include <algorithm>
#include <deque>

namespace gralab {

std::vector<UnaryAction> submodule_actions(const GradedModule& m) {
  std::vector<UnaryAction> acts;
  for (uint32_t i = 0; i < m.ring().ring().rank(); ++i) {
    uint32_t b = m.ring().ring().group().basis_element(i);
    acts.push_back([&m, b](uint32_t x) { return m.act(b, x); });
  }
  return acts;
}

std::vector<UnaryAction> left_ideal_actions(const FiniteRing& r) {
  std::vector<UnaryAction> acts;
  for (uint32_t i = 0; i < r.rank(); ++i) {
    uint32_t b = r.group().basis_element(i);
    acts.push_back([&r, b](uint32_t x) { return r.mul(b, x); });
  }
  return acts;
}

std::vector<UnaryAction> two_sided_ideal_actions(const FiniteRing& r) {
  std::vector<UnaryAction> acts = left_ideal_actions(r);
  for (uint32_t i = 0; i < r.rank(); ++i) {
    uint32_t b = r.group().basis_element(i);
    acts.push_back([&r, b](uint32_t x) { return r.mul(x, b); });
  }
  return acts;
}

Closure::Closure(const AddGroup& g) : g_(g), set_(g.size()) {
  set_.set(0);
  members_.push_back(0);
}

void Closure::seed_with(const Substructure& s) {
  set_ = s.set;
  members_ = s.members;
  addgens_ = s.addgens;
}

void Closure::absorb(uint32_t u) {
  if (set_.test(u)) return;
  addgens_.push_back(u);
  size_t base = members_.size();
  uint32_t m = u;
  while (!set_.test(m)) {
    for (size_t t = 0; t < base; ++t) {
      uint32_t y = g_.add(members_[t], m);
      set_.set(y);
      members_.push_back(y);
    }
    m = g_.add(m, u);
  }
}

void Closure::run_actions(const std::vector<UnaryAction>& actions) {
  size_t i = 0;
  while (i < members_.size()) {
    uint32_t x = members_[i++];
    for (const auto& act : actions) absorb(act(x));
  }
}

Substructure Closure::finish(SubKind kind, std::vector<uint32_t> seeds) {
  Substructure s;
  s.kind = kind;
  s.set = std::move(set_);
  std::sort(members_.begin(), members_.end());
  s.members = std::move(members_);
  s.seeds = std::move(seeds);
  s.addgens = std::move(addgens_);
  return s;
}

namespace {

Substructure close_with(const AddGroup& g, const std::vector<UnaryAction>& actions,
                        std::span<const uint32_t> gens, SubKind kind) {
  Closure c(g);
  for (uint32_t x : gens) {
    if (x >= g.size()) throw ValidationError("generator outside ambient structure");
    c.absorb(x);
  }
  c.run_actions(actions);
  return c.finish(kind, std::vector<uint32_t>(gens.begin(), gens.end()));
}

}  // namespace

Substructure close_submodule(const GradedModule& m, std::span<const uint32_t> gens) {
  return close_with(m.group(), submodule_actions(m), gens, SubKind::Submodule);
}

Substructure close_left_ideal(const FiniteRing& r, std::span<const uint32_t> gens) {
  return close_with(r.group(), left_ideal_actions(r), gens, SubKind::LeftIdeal);
}

Substructure close_two_sided_ideal(const FiniteRing& r, std::span<const uint32_t> gens) {
  return close_with(r.group(), two_sided_ideal_actions(r), gens, SubKind::TwoSidedIdeal);
}

Substructure close_additive(const AddGroup& g, std::span<const uint32_t> gens) {
  return close_with(g, {}, gens, SubKind::AdditiveSubgroup);
}

Substructure join(const AddGroup& g, const Substructure& a, const Substructure& b) {
  Closure c(g);
  c.seed_with(a);
  for (uint32_t u : b.addgens) c.absorb(u);
  Substructure s = c.finish(a.kind, {});
  s.seeds = s.addgens;
  return s;
}

Substructure intersect(const AddGroup& g, const Substructure& a, const Substructure& b) {
  Substructure s;
  s.kind = a.kind;
  s.set = a.set;
  s.set &= b.set;
  s.members = s.set.to_list();
  s.addgens = extract_addgens(g, s.members);
  s.seeds = s.addgens;
  return s;
}

std::vector<uint32_t> extract_addgens(const AddGroup& g,
                                      const std::vector<uint32_t>& members) {
  Closure c(g);
  for (uint32_t x : members) c.absorb(x);
  return c.finish(SubKind::AdditiveSubgroup, {}).addgens;
}

bool is_graded(const GradedModule& m, const Substructure& k) {
  uint32_t ng = m.ring().grading_group().size();
  for (uint32_t x : k.members) {
    if (x == 0) continue;
    for (uint32_t g = 0; g < ng; ++g)
      if (!k.set.test(m.part(x, g))) return false;
  }
  return true;
}

bool is_graded(const GradedRing& r, const Substructure& k) {
  uint32_t ng = r.grading_group().size();
  for (uint32_t x : k.members) {
    if (x == 0) continue;
    for (uint32_t g = 0; g < ng; ++g)
      if (!k.set.test(r.part(x, g))) return false;
  }
  return true;
}

int Lattice::index_of(const DenseSet& s) const {
  auto it = by_hash.find(s.hash());
  if (it == by_hash.end()) return -1;
  for (uint32_t i : it->second)
    if (items[i].set == s) return int(i);
  return -1;
}

void Lattice::rebuild_index() {
  by_hash.clear();
  for (uint32_t i = 0; i < items.size(); ++i)
    by_hash[items[i].set.hash()].push_back(i);
}

Lattice enumerate_lattice(const AddGroup& ag, const std::vector<UnaryAction>& actions,
                          std::span<const uint32_t> seeds, SubKind kind, uint64_t cap) {
  Lattice lat;
  auto try_add = [&](Substructure&& s) -> bool {
    uint64_t h = s.set.hash();
    auto& bucket = lat.by_hash[h];
    for (uint32_t i : bucket)
      if (lat.items[i].set == s.set) return false;
    if (lat.items.size() >= cap)
      throw CapExceeded("incomplete enumeration: lattice cap " + std::to_string(cap) +
                        " exceeded");
    bucket.push_back(uint32_t(lat.items.size()));
    lat.items.push_back(std::move(s));
    return true;
  };

  try_add(close_with(ag, actions, {}, kind));
  // Distinct cyclic substructures form the join alphabet.
  std::vector<uint32_t> cyclic_idx;
  for (uint32_t s : seeds) {
    uint32_t gen[1] = {s};
    Substructure c = close_with(ag, actions, gen, kind);
    size_t before = lat.items.size();
    try_add(std::move(c));
    if (lat.items.size() != before) cyclic_idx.push_back(uint32_t(before));
  }

  std::deque<uint32_t> queue;
  for (uint32_t i = 0; i < lat.items.size(); ++i) queue.push_back(i);
  while (!queue.empty()) {
    uint32_t ki = queue.front();
    queue.pop_front();
    for (uint32_t ci : cyclic_idx) {
      if (lat.items[ci].set.subset_of(lat.items[ki].set)) continue;
      Substructure j = join(ag, lat.items[ki], lat.items[ci]);
      size_t before = lat.items.size();
      try_add(std::move(j));
      if (lat.items.size() != before) queue.push_back(uint32_t(before));
    }
  }

  std::sort(lat.items.begin(), lat.items.end(),
            [](const Substructure& a, const Substructure& b) {
              return DenseSet::compare(a.set, b.set) < 0;
            });
  for (auto& item : lat.items) item.seeds = item.addgens;
  lat.rebuild_index();
  return lat;
}

Lattice enumerate_graded_submodules(const GradedModule& m, uint64_t cap) {
  return enumerate_lattice(m.group(), submodule_actions(m), m.homogeneous_elements(),
                           SubKind::Submodule, cap);
}

Lattice enumerate_all_submodules(const GradedModule& m, uint64_t cap) {
  std::vector<uint32_t> all(m.size());
  for (uint32_t i = 0; i < m.size(); ++i) all[i] = i;
  return enumerate_lattice(m.group(), submodule_actions(m), all, SubKind::Submodule, cap);
}

Lattice enumerate_graded_left_ideals(const GradedRing& r, uint64_t cap) {
  return enumerate_lattice(r.ring().group(), left_ideal_actions(r.ring()),
                           r.homogeneous_elements(), SubKind::LeftIdeal, cap);
}

Lattice enumerate_graded_two_sided_ideals(const GradedRing& r, uint64_t cap) {
  return enumerate_lattice(r.ring().group(), two_sided_ideal_actions(r.ring()),
                           r.homogeneous_elements(), SubKind::TwoSidedIdeal, cap);
}

Lattice enumerate_all_left_ideals(const FiniteRing& r, uint64_t cap) {
  std::vector<uint32_t> all(r.size());
  for (uint32_t i = 0; i < r.size(); ++i) all[i] = i;
  return enumerate_lattice(r.group(), left_ideal_actions(r), all, SubKind::LeftIdeal, cap);
}

Lattice enumerate_all_two_sided_ideals(const FiniteRing& r, uint64_t cap) {
  std::vector<uint32_t> all(r.size());
  for (uint32_t i = 0; i < r.size(); ++i) all[i] = i;
  return enumerate_lattice(r.group(), two_sided_ideal_actions(r), all,
                           SubKind::TwoSidedIdeal, cap);
}

Lattice enumerate_subgroups(const AddGroup& g, uint64_t cap) {
  std::vector<uint32_t> all(g.size());
  for (uint32_t i = 0; i < g.size(); ++i) all[i] = i;
  return enumerate_lattice(g, {}, all, SubKind::AdditiveSubgroup, cap);
}

namespace {

template <typename Op>
DenseSet colon_generic(uint32_t ring_size, const DenseSet& k,
                       std::span<const uint32_t> x_addgens,
                       const std::vector<uint32_t>* universe, Op op) {
  DenseSet out(ring_size);
  auto test = [&](uint32_t a) {
    for (uint32_t x : x_addgens)
      if (!k.test(op(a, x))) return;
    out.set(a);
  };
  if (universe) {
    for (uint32_t a : *universe) test(a);
  } else {
    for (uint32_t a = 0; a < ring_size; ++a) test(a);
  }
  return out;
}

}  // namespace

DenseSet colon_in_ring(const GradedModule& m, const DenseSet& k,
                       std::span<const uint32_t> x_addgens,
                       const std::vector<uint32_t>* universe) {
  return colon_generic(m.ring().ring().size(), k, x_addgens, universe,
                       [&m](uint32_t a, uint32_t x) { return m.act(a, x); });
}

DenseSet colon_in_ring(const FiniteRing& r, const DenseSet& k,
                       std::span<const uint32_t> x_addgens,
                       const std::vector<uint32_t>* universe) {
  return colon_generic(r.size(), k, x_addgens, universe,
                       [&r](uint32_t a, uint32_t x) { return r.mul(a, x); });
}

DenseSet colon_in_module(const GradedModule& m, const DenseSet& k, uint32_t r,
                         const std::vector<uint32_t>* universe) {
  DenseSet out(m.size());
  auto test = [&](uint32_t x) {
    if (k.test(m.act(r, x))) out.set(x);
  };
  if (universe) {
    for (uint32_t x : *universe) test(x);
  } else {
    for (uint32_t x = 0; x < m.size(); ++x) test(x);
  }
  return out;
}

DenseSet annihilator_in_ring(const GradedModule& m, std::span<const uint32_t> x_addgens,
                             const std::vector<uint32_t>* universe) {
  DenseSet zero(m.size());
  zero.set(0);
  return colon_in_ring(m, zero, x_addgens, universe);
}

bool is_maximal_graded(const Lattice& graded_subs, int k_idx) {
  const Substructure& k = graded_subs.items[size_t(k_idx)];
  const Substructure& whole = graded_subs.items.back();
  if (k.set == whole.set) return false;
  for (size_t j = 0; j < graded_subs.items.size(); ++j) {
    const Substructure& cand = graded_subs.items[j];
    if (int(j) == k_idx) continue;
    if (cand.set == whole.set || cand.set == k.set) continue;
    if (k.set.subset_of(cand.set)) return false;
  }
  return true;
}

SandwichOutcome sandwich_test(const GradedModule& m, uint32_t x, uint32_t y,
                              std::span<const uint32_t> middle_addgens,
                              const Substructure& l, const DenseSet& k) {
  const FiniteRing& r = m.ring().ring();
  DenseSet colon = colon_in_ring(m, k, l.addgens);
  DenseSet ann = annihilator_in_ring(m, l.addgens);
  bool contained = true, zero = true;
  for (uint32_t mid : middle_addgens) {
    uint32_t p = r.mul(r.mul(x, mid), y);
    if (!colon.test(p)) contained = false;
    if (!ann.test(p)) zero = false;
  }
  if (zero) return SandwichOutcome::ProductZero;
  if (contained) return SandwichOutcome::Holds;
  return SandwichOutcome::NotContained;
}

}  // namespace gralab

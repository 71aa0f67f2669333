#include "gralab/theorems.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace gralab {

Json TheoremReport::to_json() const {
  return Json{{"theorem", theorem_id},
              {"structure", structure},
              {"instances_checked", instances_checked},
              {"hypothesis_passing", hypothesis_passing},
              {"undetermined", undetermined},
              {"violations", violations},
              {"undetermined_cases", undetermined_cases},
              {"notes", notes}};
}

namespace {

const std::vector<std::string> kTheoremIds = {
    "thm-faithful-equivalence",
    "cor-xIL",
    "thm-colon-L-Kg",
    "thm-colon-L-K",
    "thm-ann-colon",
    "thm-hom-preimage",
    "thm-hom-image",
    "thm-quotient-down",
    "thm-quotient-up",
    "prop-2abs-colon",
    "prop-triple-zero-exists",
    "prop-non-triple-zero",
    "prop-IJL-components",
    "thm-triple-zero-consequences",
    "prop-cube-ann",
    "thm-product-projection",
    "thm-product-triple-ann",
    "lem-maximal-prime",
    "thm-two-maximal",
    "cor-comparable-or-zero",
    "thm-duo-completely",
    "thm-duo-chain",
    "prop-radical-equality",
};

bool component_proper(StructCtx::Component& comp, const Substructure& k) {
  for (uint32_t x : comp.view.mod_embed)
    if (!k.set.test(x)) return true;
  return false;
}

DenseSet comp_restrict_module(StructCtx::Component& comp, const Substructure& k) {
  DenseSet out(comp.view.module->size());
  for (uint32_t x = 0; x < comp.view.module->size(); ++x)
    if (k.set.test(comp.view.mod_embed[x])) out.set(x);
  return out;
}

DenseSet comp_restrict_ring(StructCtx::Component& comp, const DenseSet& parent_set) {
  DenseSet out(comp.view.ring->ring().size());
  for (uint32_t x = 0; x < comp.view.ring->ring().size(); ++x)
    if (parent_set.test(comp.view.ring_embed[x])) out.set(x);
  return out;
}

Substructure sub_from_set(const AddGroup& g, DenseSet set, SubKind kind) {
  Substructure s;
  s.kind = kind;
  s.set = std::move(set);
  s.members = s.set.to_list();
  s.addgens = extract_addgens(g, s.members);
  s.seeds = s.addgens;
  return s;
}

bool is_cwp(StructCtx& s, int k) {
  return classify_cached(s, k, Pred::GradedClassicalWeaklyPrime).holds;
}

bool g_cwp(StructCtx& s, int k, uint32_t g) {
  return classify_cached(s, k, Pred::GClassicalWeaklyPrime, int(g)).holds;
}

// x*A*y*L == 0, via the streamed sandwich table.
bool xayl_zero(StructCtx& s, const uint32_t* prods, uint32_t kr, int l) {
  const DenseSet& ann = s.ann_l(l);
  for (uint32_t i = 0; i < kr; ++i)
    if (!ann.test(prods[i])) return false;
  return true;
}

bool xayl_contained(StructCtx& s, const uint32_t* prods, uint32_t kr, int k, int l) {
  const DenseSet& colon = s.colon_kl(k, l);
  for (uint32_t i = 0; i < kr; ++i)
    if (!colon.test(prods[i])) return false;
  return true;
}

struct TzScan {
  size_t xi, yi;
  int li;
  uint32_t x, y;
};

// Calls fn for every graded classical triple zero of K, in (x, y, L) order.
template <typename Fn>
void for_each_triple_zero(StructCtx& s, int k, Fn&& fn) {
  const auto& ha = s.A().homogeneous_elements();
  const auto& prods = s.sandwich_products();
  const Lattice& lat = s.graded_submodules();
  size_t na = ha.size();
  uint32_t kr = s.A().ring().rank();
  for (size_t xi = 0; xi < na; ++xi)
    for (size_t yi = 0; yi < na; ++yi) {
      const uint32_t* pr = &prods[(xi * na + yi) * kr];
      for (size_t li = 0; li < lat.items.size(); ++li) {
        if (!xayl_zero(s, pr, kr, int(li))) continue;
        const DenseSet& colon = s.colon_kl(k, int(li));
        if (colon.test(ha[xi]) || colon.test(ha[yi])) continue;
        if (!fn(TzScan{xi, yi, int(li), ha[xi], ha[yi]})) return;
      }
    }
}

Json elemj(StructCtx& s, uint32_t x) { return elem_json(s.A().ring().group(), x); }
Json melemj(StructCtx& s, uint32_t x) { return elem_json(s.M().group(), x); }
Json subj(StructCtx& s, int idx) {
  return sub_json(s.M().group(), s.graded_submodules().items[size_t(idx)]);
}

// ---------------------------------------------------------------------------
// component-level theorems
// ---------------------------------------------------------------------------

void thm_faithful_equivalence(StructCtx& s, TheoremReport& r) {
  uint32_t ng = s.A().grading_group().size();
  const Lattice& lat = s.graded_submodules();
  for (uint32_t g = 0; g < ng; ++g) {
    auto& comp = s.component(g);
    bool faithful_all = all_nonzero_submodules_faithful(*comp.ctx);
    const Lattice& ideals = comp.ctx->graded_two_sided_ideals();
    const Lattice& subs = comp.ctx->graded_submodules();
    for (int k = 0; k < int(lat.items.size()); ++k) {
      const Substructure& K = lat.items[size_t(k)];
      r.instances_checked++;
      if (!faithful_all || !component_proper(comp, K)) continue;
      bool lhs = g_cwp(s, k, g);
      bool rhs = true;
      Json rhs_witness;
      for (size_t ii = 0; ii < ideals.items.size() && rhs; ++ii)
        for (size_t ji = 0; ji < ideals.items.size() && rhs; ++ji) {
          // products of the embedded ideal generators
          std::vector<uint32_t> ij;
          for (uint32_t u : comp.ideal_embgens[ii])
            for (uint32_t v : comp.ideal_embgens[ji])
              ij.push_back(s.A().ring().mul(u, v));
          for (size_t li = 0; li < subs.items.size(); ++li) {
            const auto& lg = comp.sub_embgens[li];
            if (!product_contained(s.M(), ij, lg, K.set)) continue;
            if (!product_nonzero(s.M(), ij, lg)) continue;
            bool il = product_contained(s.M(), comp.ideal_embgens[ii], lg, K.set);
            bool jl = product_contained(s.M(), comp.ideal_embgens[ji], lg, K.set);
            if (!il && !jl) {
              rhs = false;
              rhs_witness = Json{{"I", gens_json(s.A().ring().group(), comp.ideal_embgens[ii])},
                                 {"J", gens_json(s.A().ring().group(), comp.ideal_embgens[ji])},
                                 {"L", gens_json(s.M().group(), lg)}};
              break;
            }
          }
        }
      r.hypothesis_passing++;
      if (lhs != rhs)
        r.violations.push_back(Json{{"component", int(g)},
                                    {"K", subj(s, k)},
                                    {"g_classical_weakly_prime", lhs},
                                    {"ijl_condition", rhs},
                                    {"rhs_witness", rhs_witness}});
    }
  }
}

void cor_xil(StructCtx& s, TheoremReport& r) {
  uint32_t ng = s.A().grading_group().size();
  const Lattice& lat = s.graded_submodules();
  const FiniteRing& ring = s.A().ring();
  for (uint32_t g = 0; g < ng; ++g) {
    auto& comp = s.component(g);
    bool faithful_all = all_nonzero_submodules_faithful(*comp.ctx);
    const Lattice& subs = comp.ctx->graded_submodules();
    const Lattice& ideals = comp.ctx->graded_two_sided_ideals();
    for (int k = 0; k < int(lat.items.size()); ++k) {
      const Substructure& K = lat.items[size_t(k)];
      r.instances_checked++;
      if (!faithful_all || !component_proper(comp, K)) continue;
      if (!g_cwp(s, k, g)) continue;
      r.hypothesis_passing++;
      for (uint32_t xe = 0; xe < comp.view.ring->ring().size(); ++xe) {
        uint32_t x = comp.view.ring_embed[xe];
        for (size_t ii = 0; ii < ideals.items.size(); ++ii)
          for (size_t li = 0; li < subs.items.size(); ++li) {
            const auto& ig = comp.ideal_embgens[ii];
            const auto& lg = comp.sub_embgens[li];
            bool xl = product_contained(s.M(), std::vector<uint32_t>{x}, lg, K.set);
            bool il = product_contained(s.M(), ig, lg, K.set);
            for (int variant = 0; variant < 2; ++variant) {
              std::vector<uint32_t> xig;
              for (uint32_t u : ig)
                xig.push_back(variant == 0 ? ring.mul(x, u) : ring.mul(u, x));
              if (!product_contained(s.M(), xig, lg, K.set)) continue;
              if (!product_nonzero(s.M(), xig, lg)) continue;
              if (!xl && !il)
                r.violations.push_back(
                    Json{{"component", int(g)},
                         {"K", subj(s, k)},
                         {"variant", variant == 0 ? "xIL" : "IxL"},
                         {"x", elemj(s, x)},
                         {"I", gens_json(ring.group(), ig)},
                         {"L", gens_json(s.M().group(), lg)}});
            }
          }
      }
    }
  }
}

void thm_colon_l(StructCtx& s, TheoremReport& r, bool full_k) {
  uint32_t ng = s.A().grading_group().size();
  const Lattice& lat = s.graded_submodules();
  for (uint32_t g = 0; g < ng; ++g) {
    auto& comp = s.component(g);
    const Lattice& subs = comp.ctx->graded_submodules();
    for (int k = 0; k < int(lat.items.size()); ++k) {
      const Substructure& K = lat.items[size_t(k)];
      bool kcwp = component_proper(comp, K) && g_cwp(s, k, g);
      DenseSet kg = comp_restrict_module(comp, K);
      for (size_t li = 0; li < subs.items.size(); ++li) {
        r.instances_checked++;
        if (!kcwp) continue;
        const Substructure& L = subs.items[li];
        if (annihilator_in_ring(*comp.view.module, L.addgens).count() != 1)
          continue;  // L not faithful over A_e
        // L <= M_g, so L <= K iff L <= K_g; both theorem variants share it.
        if (L.set.subset_of(kg)) continue;
        r.hypothesis_passing++;
        DenseSet colon = colon_in_ring(*comp.view.module, kg, L.addgens);
        Substructure p =
            sub_from_set(comp.view.ring->ring().group(), std::move(colon), SubKind::LeftIdeal);
        Verdict v = classify_ideal(*comp.ctx, p, Pred::WeaklyPrimeLeftIdeal);
        if (!v.holds)
          r.violations.push_back(
              Json{{"component", int(g)},
                   {"K", subj(s, k)},
                   {"L", gens_json(s.M().group(), comp.sub_embgens[li])},
                   {"colon", sub_json(comp.view.ring->ring().group(), p)},
                   {"verdict", v.to_json()},
                   {"variant", full_k ? "colon-K" : "colon-Kg"}});
      }
    }
  }
}

void thm_ann_colon(StructCtx& s, TheoremReport& r) {
  uint32_t ng = s.A().grading_group().size();
  const Lattice& lat = s.graded_submodules();
  for (uint32_t g = 0; g < ng; ++g) {
    auto& comp = s.component(g);
    const GradedModule& mg = *comp.view.module;
    if (mg.size() <= 1) continue;  // empty component
    std::vector<uint32_t> mg_gens;
    for (uint32_t j = 0; j < mg.rank(); ++j)
      mg_gens.push_back(mg.group().basis_element(j));
    DenseSet ann = annihilator_in_ring(mg, mg_gens);
    Substructure ann_sub =
        sub_from_set(comp.view.ring->ring().group(), std::move(ann), SubKind::LeftIdeal);
    bool ann_wp = ann_sub.size() < comp.view.ring->ring().size() &&
                  classify_ideal(*comp.ctx, ann_sub, Pred::WeaklyPrimeLeftIdeal).holds;
    for (int k = 0; k < int(lat.items.size()); ++k) {
      r.instances_checked++;
      const Substructure& K = lat.items[size_t(k)];
      if (!component_proper(comp, K) || !g_cwp(s, k, g) || !ann_wp) continue;
      r.hypothesis_passing++;
      DenseSet kg = comp_restrict_module(comp, K);
      DenseSet colon = colon_in_ring(mg, kg, mg_gens);
      Substructure p =
          sub_from_set(comp.view.ring->ring().group(), std::move(colon), SubKind::LeftIdeal);
      Verdict v = classify_ideal(*comp.ctx, p, Pred::WeaklyPrimeLeftIdeal);
      if (!v.holds)
        r.violations.push_back(Json{{"component", int(g)},
                                    {"K", subj(s, k)},
                                    {"verdict", v.to_json()}});
    }
  }
}

// ---------------------------------------------------------------------------
// homomorphism and quotient theorems
// ---------------------------------------------------------------------------

void thm_hom_preimage(StructCtx& s, TheoremReport& r) {
  const Lattice& lat = s.graded_submodules();
  int whole = s.whole_index();
  // Injective graded homomorphisms into M: the identity and every submodule
  // inclusion.
  for (int src = 0; src <= whole + 1; ++src) {
    bool identity = src > whole;
    StructCtx* xctx;
    const GradedHom* f;
    std::optional<GradedHom> id_hom;
    if (identity) {
      std::vector<uint32_t> images;
      for (uint32_t j = 0; j < s.M().rank(); ++j)
        images.push_back(s.M().group().basis_element(j));
      id_hom.emplace(s.module_ptr(), s.module_ptr(), images);
      xctx = &s;
      f = &*id_hom;
    } else {
      if (lat.items[size_t(src)].is_zero()) continue;
      auto& sub = s.submodule_module(src);
      xctx = sub.ctx.get();
      f = sub.inclusion.get();
    }
    for (int k = 0; k < int(lat.items.size()); ++k) {
      r.instances_checked++;
      if (!is_cwp(s, k) || k == whole) continue;
      Substructure pre = hom_preimage(*f, lat.items[size_t(k)]);
      int pidx = xctx->submodule_index(pre.set);
      if (pidx < 0) throw std::logic_error("preimage missing from lattice");
      if (pidx == xctx->whole_index()) continue;  // f^{-1}(K) = M
      r.hypothesis_passing++;
      if (!is_cwp(*xctx, pidx))
        r.violations.push_back(Json{{"hom_source", identity ? Json("identity") : subj(s, src)},
                                    {"K", subj(s, k)},
                                    {"preimage", sub_json(xctx->M().group(), pre)}});
    }
  }
}

void thm_hom_image(StructCtx& s, TheoremReport& r, bool quotient_down_only) {
  const Lattice& lat = s.graded_submodules();
  int whole = s.whole_index();
  for (int t = 0; t < whole; ++t) {
    auto& q = s.quotient(t);
    for (int k = 0; k < int(lat.items.size()); ++k) {
      r.instances_checked++;
      const Substructure& K = lat.items[size_t(k)];
      const Substructure& T = lat.items[size_t(t)];
      if (quotient_down_only) {
        // T strictly below K, both proper.
        if (k == whole || t == k || !T.set.subset_of(K.set)) continue;
      } else {
        if (k == whole) continue;  // f(K) must stay proper for the conclusion
        if (!T.set.subset_of(K.set)) continue;  // Ker f <= K
      }
      if (!is_cwp(s, k)) continue;
      r.hypothesis_passing++;
      Substructure img = hom_image(*q.projection, K);
      int iidx = q.ctx->submodule_index(img.set);
      if (iidx < 0) throw std::logic_error("image missing from quotient lattice");
      if (!is_cwp(*q.ctx, iidx))
        r.violations.push_back(Json{{"T", subj(s, t)},
                                    {"K", subj(s, k)},
                                    {"image", sub_json(q.ctx->M().group(), img)}});
    }
  }
}

void thm_quotient_up(StructCtx& s, TheoremReport& r) {
  const Lattice& lat = s.graded_submodules();
  int whole = s.whole_index();
  for (int t = 0; t < whole; ++t) {
    auto& q = s.quotient(t);
    for (int k = 0; k < whole; ++k) {
      r.instances_checked++;
      const Substructure& K = lat.items[size_t(k)];
      const Substructure& T = lat.items[size_t(t)];
      if (t == k || !T.set.subset_of(K.set)) continue;
      if (!is_cwp(s, t)) continue;
      Substructure img = hom_image(*q.projection, K);
      int iidx = q.ctx->submodule_index(img.set);
      if (iidx < 0) throw std::logic_error("image missing from quotient lattice");
      if (iidx == q.ctx->whole_index() || !is_cwp(*q.ctx, iidx)) continue;
      r.hypothesis_passing++;
      if (!is_cwp(s, k))
        r.violations.push_back(Json{{"T", subj(s, t)}, {"K", subj(s, k)}});
    }
  }
}

// ---------------------------------------------------------------------------
// colon / 2-absorbing / triple zero propositions
// ---------------------------------------------------------------------------

void prop_2abs_colon(StructCtx& s, TheoremReport& r) {
  const Lattice& lat = s.graded_submodules();
  int whole = s.whole_index();
  for (int k = 0; k < int(lat.items.size()); ++k) {
    r.instances_checked++;
    if (k == whole) continue;
    if (!classify_cached(s, k, Pred::GradedWeakly2Absorbing).holds) continue;
    Substructure colon = sub_from_set(s.A().ring().group(), s.colon_km(k),
                                      SubKind::TwoSidedIdeal);
    if (colon.size() == s.A().ring().size()) continue;
    Verdict wp = classify_ideal(s, colon, Pred::GradedWeaklyPrimeIdeal);
    if (!wp.holds) continue;
    r.hypothesis_passing++;
    if (!is_cwp(s, k))
      r.violations.push_back(Json{{"K", subj(s, k)}});
  }
}

void prop_triple_zero_exists(StructCtx& s, TheoremReport& r) {
  const Lattice& lat = s.graded_submodules();
  int whole = s.whole_index();
  for (int k = 0; k < int(lat.items.size()); ++k) {
    r.instances_checked++;
    if (k == whole) continue;
    if (!is_cwp(s, k)) continue;
    if (classify_cached(s, k, Pred::GradedClassicalPrime).holds) continue;
    r.hypothesis_passing++;
    if (!find_classical_triple_zero(s, k))
      r.violations.push_back(Json{{"K", subj(s, k)}});
  }
}

void prop_non_triple_zero(StructCtx& s, TheoremReport& r) {
  const Lattice& lat = s.graded_submodules();
  int whole = s.whole_index();
  const auto& ha = s.A().homogeneous_elements();
  const auto& prods = s.sandwich_products();
  size_t na = ha.size();
  uint32_t kr = s.A().ring().rank();
  for (int k = 0; k < whole; ++k) {
    if (!is_cwp(s, k)) {
      r.instances_checked++;
      continue;
    }
    for (size_t xi = 0; xi < na; ++xi)
      for (size_t yi = 0; yi < na; ++yi) {
        const uint32_t* pr = &prods[(xi * na + yi) * kr];
        for (size_t li = 0; li < lat.items.size(); ++li) {
          r.instances_checked++;
          if (!xayl_contained(s, pr, kr, k, int(li))) continue;
          const DenseSet& colon = s.colon_kl(k, int(li));
          bool xl = colon.test(ha[xi]), yl = colon.test(ha[yi]);
          bool tz = xayl_zero(s, pr, kr, int(li)) && !xl && !yl;
          if (tz) continue;
          r.hypothesis_passing++;
          if (!xl && !yl)
            r.violations.push_back(Json{{"K", subj(s, k)},
                                        {"x", elemj(s, ha[xi])},
                                        {"y", elemj(s, ha[yi])},
                                        {"L", subj(s, int(li))}});
        }
      }
  }
}

void prop_ijl_components(StructCtx& s, TheoremReport& r) {
  const Lattice& lat = s.graded_submodules();
  const Lattice& ideals = s.graded_two_sided_ideals();
  const auto& ha = s.A().homogeneous_elements();
  const auto& prods = s.sandwich_products();
  size_t na = ha.size();
  uint32_t kr = s.A().ring().rank();
  uint32_t ng = s.A().grading_group().size();
  int whole = s.whole_index();

  for (int k = 0; k < whole; ++k) {
    bool kcwp = is_cwp(s, k);
    for (size_t ii = 0; ii < ideals.items.size(); ++ii)
      for (size_t ji = 0; ji < ideals.items.size(); ++ji)
        for (size_t li = 0; li < lat.items.size(); ++li) {
          r.instances_checked++;
          if (!kcwp) continue;
          const Substructure& I = ideals.items[ii];
          const Substructure& J = ideals.items[ji];
          const Substructure& L = lat.items[li];
          if (!product_contained(
                  s.M(),
                  [&] {
                    std::vector<uint32_t> ij;
                    for (uint32_t u : I.addgens)
                      for (uint32_t v : J.addgens) ij.push_back(s.A().ring().mul(u, v));
                    return ij;
                  }(),
                  L.addgens, lat.items[size_t(k)].set))
            continue;
          // No (x, y, L) triple zero with x in I, y in J homogeneous.
          bool tz_free = true;
          const DenseSet& colon = s.colon_kl(k, int(li));
          for (size_t xi = 0; xi < na && tz_free; ++xi) {
            if (!I.set.test(ha[xi])) continue;
            for (size_t yi = 0; yi < na; ++yi) {
              if (!J.set.test(ha[yi])) continue;
              const uint32_t* pr = &prods[(xi * na + yi) * kr];
              if (!xayl_zero(s, pr, kr, int(li))) continue;
              if (!colon.test(ha[xi]) && !colon.test(ha[yi])) {
                tz_free = false;
                break;
              }
            }
          }
          if (!tz_free) continue;
          r.hypothesis_passing++;
          // Conclusion, reduced per component: I_g L <= K or J_g L <= K.
          for (uint32_t g = 0; g < ng; ++g) {
            std::vector<uint32_t> igens, jgens;
            for (uint32_t u : I.addgens) igens.push_back(s.A().part(u, g));
            for (uint32_t u : J.addgens) jgens.push_back(s.A().part(u, g));
            bool il = product_contained(s.M(), igens, L.addgens,
                                        lat.items[size_t(k)].set);
            bool jl = product_contained(s.M(), jgens, L.addgens,
                                        lat.items[size_t(k)].set);
            if (!il && !jl) {
              r.violations.push_back(Json{{"K", subj(s, k)},
                                          {"I", sub_json(s.A().ring().group(), I)},
                                          {"J", sub_json(s.A().ring().group(), J)},
                                          {"L", subj(s, int(li))},
                                          {"component", int(g)}});
              break;
            }
          }
        }
  }
}

void thm_triple_zero_consequences(StructCtx& s, TheoremReport& r) {
  const Lattice& lat = s.graded_submodules();
  const FiniteRing& ring = s.A().ring();
  int whole = s.whole_index();
  uint32_t ng = s.A().grading_group().size();
  for (int k = 0; k < whole; ++k) {
    if (!is_cwp(s, k)) continue;
    const Substructure& K = lat.items[size_t(k)];
    // (K :_{A_g} M) generators per degree g.
    std::vector<std::vector<uint32_t>> colgens(ng);
    for (uint32_t g = 0; g < ng; ++g) {
      std::vector<uint32_t> members;
      const DenseSet& ckm = s.colon_km(k);
      for (uint32_t a : s.A().component(g))
        if (ckm.test(a)) members.push_back(a);
      colgens[g] = extract_addgens(ring.group(), members);
    }
    const DenseSet& annK = s.ann_l(k);
    uint32_t kr = ring.rank();

    for_each_triple_zero(s, k, [&](const TzScan& tz) {
      r.instances_checked++;
      r.hypothesis_passing++;
      const Substructure& L = lat.items[size_t(tz.li)];
      auto degx = s.A().degree_of(tz.x);
      auto degy = s.A().degree_of(tz.y);
      auto fail = [&](int item, const char* what) {
        r.violations.push_back(Json{{"K", subj(s, k)},
                                    {"x", elemj(s, tz.x)},
                                    {"y", elemj(s, tz.y)},
                                    {"L", subj(s, tz.li)},
                                    {"item", item},
                                    {"condition", what}});
      };
      // (1) xAyK = 0
      {
        const auto& prods = s.sandwich_products();
        size_t na = s.A().homogeneous_elements().size();
        const uint32_t* pr = &prods[(tz.xi * na + tz.yi) * kr];
        for (uint32_t i = 0; i < kr; ++i)
          if (!annK.test(pr[i])) {
            fail(1, "xAyK != 0");
            break;
          }
      }
      if (degy) {
        // (2) x (K:_{A_gy} M) L = 0
        for (uint32_t u : colgens[*degy])
          for (uint32_t w : L.addgens)
            if (s.M().act(ring.mul(tz.x, u), w) != 0) {
              fail(2, "x(K:M)L != 0");
              goto item3;
            }
      }
    item3:
      if (degx) {
        // (3) (K:_{A_gx} M) y L = 0
        for (uint32_t u : colgens[*degx])
          for (uint32_t w : L.addgens)
            if (s.M().act(ring.mul(u, tz.y), w) != 0) {
              fail(3, "(K:M)yL != 0");
              goto item4;
            }
      }
    item4:
      if (degx && degy && *degx == *degy) {
        // (4) (K:_{A_g} M)^2 L = 0
        for (uint32_t u : colgens[*degx])
          for (uint32_t v : colgens[*degx])
            for (uint32_t w : L.addgens)
              if (s.M().act(ring.mul(u, v), w) != 0) {
                fail(4, "(K:M)^2 L != 0");
                goto item5;
              }
      }
    item5:
      if (degy) {
        // (5) x (K:_{A_gy} M) K = 0
        for (uint32_t u : colgens[*degy])
          for (uint32_t w : K.addgens)
            if (s.M().act(ring.mul(tz.x, u), w) != 0) {
              fail(5, "x(K:M)K != 0");
              goto item6;
            }
      }
    item6:
      if (degx) {
        // (6) (K:_{A_gx} M) y K = 0
        for (uint32_t u : colgens[*degx])
          for (uint32_t w : K.addgens)
            if (s.M().act(ring.mul(u, tz.y), w) != 0) {
              fail(6, "(K:M)yK != 0");
              goto item7;
            }
      }
    item7:
      if (degx && degy && *degx == *degy) {
        // (7) (K:_{A_g} M)^2 K = 0
        for (uint32_t u : colgens[*degx])
          for (uint32_t v : colgens[*degx])
            for (uint32_t w : K.addgens)
              if (s.M().act(ring.mul(u, v), w) != 0) {
                fail(7, "(K:M)^2 K != 0");
                return true;
              }
      }
      return true;
    });
  }
}

void prop_cube_ann(StructCtx& s, TheoremReport& r) {
  const FiniteRing& ring = s.A().ring();
  int whole = s.whole_index();
  uint32_t e = s.A().grading_group().identity();
  uint32_t ng = s.A().grading_group().size();
  bool m_faithful = s.ann_module().count() == 1;
  for (int k = 0; k < whole; ++k) {
    if (!is_cwp(s, k)) {
      r.instances_checked++;
      continue;
    }
    // Gather per-degree colon generators as in the seven-part theorem.
    std::vector<std::vector<uint32_t>> colgens(ng);
    for (uint32_t g = 0; g < ng; ++g) {
      std::vector<uint32_t> members;
      const DenseSet& ckm = s.colon_km(k);
      for (uint32_t a : s.A().component(g))
        if (ckm.test(a)) members.push_back(a);
      colgens[g] = extract_addgens(ring.group(), members);
    }
    bool k_faithful = s.ann_l(k).count() == 1;
    bool found_e_tz = false;
    std::vector<uint32_t> same_degree_tz;  // degrees with a same-degree tz
    std::vector<uint32_t> same_degree_tz_faithful_l;
    for_each_triple_zero(s, k, [&](const TzScan& tz) {
      auto dx = s.A().degree_of(tz.x);
      auto dy = s.A().degree_of(tz.y);
      if (dx && dy && *dx == *dy) {
        same_degree_tz.push_back(*dx);
        if (s.ann_l(tz.li).count() == 1) same_degree_tz_faithful_l.push_back(*dx);
        if (*dx == e) found_e_tz = true;
      }
      return true;
    });
    r.instances_checked++;
    if (found_e_tz) {
      r.hypothesis_passing++;
      // (K :_{A_e} M)^3 <= Ann_{A_e}(M); equality with 0 when M faithful.
      const DenseSet& annM = s.ann_module();
      for (uint32_t u1 : colgens[e])
        for (uint32_t u2 : colgens[e])
          for (uint32_t u3 : colgens[e]) {
            uint32_t p = ring.mul(ring.mul(u1, u2), u3);
            if (!annM.test(p) || (m_faithful && p != 0)) {
              r.violations.push_back(Json{{"K", subj(s, k)},
                                          {"condition", "(K:M)^3 not inside Ann(M)"}});
              goto next_checks;
            }
          }
    }
  next_checks:
    // Squared-colon corollaries for faithful K or faithful L.
    std::sort(same_degree_tz.begin(), same_degree_tz.end());
    same_degree_tz.erase(std::unique(same_degree_tz.begin(), same_degree_tz.end()),
                         same_degree_tz.end());
    for (uint32_t g : same_degree_tz) {
      bool applies = k_faithful ||
                     std::find(same_degree_tz_faithful_l.begin(),
                               same_degree_tz_faithful_l.end(),
                               g) != same_degree_tz_faithful_l.end();
      if (!applies) continue;
      r.hypothesis_passing++;
      bool bad = false;
      for (uint32_t u1 : colgens[g])
        for (uint32_t u2 : colgens[g])
          if (ring.mul(u1, u2) != 0) {
            bad = true;
            break;
          }
      if (bad)
        r.violations.push_back(
            Json{{"K", subj(s, k)},
                 {"component", int(g)},
                 {"condition", "(K:M)^2 != 0 despite faithful K or L"}});
    }
  }
}

// ---------------------------------------------------------------------------
// product, maximal and multiplication-module theorems
// ---------------------------------------------------------------------------

void thm_product(StructCtx& s, TheoremReport& r, const VerifyOptions& opt,
                 bool triple_ann) {
  StructCtx* p = s.product_self(opt.product_cap);
  if (!p) {
    r.notes = Json{{"skipped", "product exceeds size cap"}};
    return;
  }
  const Lattice& lat = s.graded_submodules();
  uint32_t msize = s.M().size();
  for (int k = 0; k < int(lat.items.size()); ++k) {
    r.instances_checked++;
    const Substructure& K = lat.items[size_t(k)];
    // Build K x S (S = M) inside the product module.
    DenseSet ks(p->M().size());
    for (uint32_t a : K.members)
      for (uint32_t b = 0; b < msize; ++b) ks.set(a * msize + b);
    int pidx = p->submodule_index(ks);
    if (pidx < 0) throw std::logic_error("K x S missing from product lattice");
    if (pidx == p->whole_index()) continue;  // K x S proper requires K proper
    if (!is_cwp(*p, pidx)) continue;
    if (!triple_ann) {
      r.hypothesis_passing++;
      if (!is_cwp(s, k))
        r.violations.push_back(Json{{"K", subj(s, k)}});
    } else {
      const auto& prods = s.sandwich_products();
      size_t na = s.A().homogeneous_elements().size();
      uint32_t kr = s.A().ring().rank();
      const DenseSet& annS = s.ann_module();
      for_each_triple_zero(s, k, [&](const TzScan& tz) {
        r.hypothesis_passing++;
        const uint32_t* pr = &prods[(tz.xi * na + tz.yi) * kr];
        for (uint32_t i = 0; i < kr; ++i)
          if (!annS.test(pr[i])) {
            r.violations.push_back(Json{{"K", subj(s, k)},
                                        {"x", elemj(s, tz.x)},
                                        {"y", elemj(s, tz.y)},
                                        {"L", subj(s, tz.li)}});
            return false;
          }
        return true;
      });
    }
  }
}

void lem_maximal_prime(StructCtx& s, TheoremReport& r) {
  const Lattice& lat = s.graded_submodules();
  for (int k = 0; k < int(lat.items.size()); ++k) {
    r.instances_checked++;
    if (!is_maximal_graded(lat, k)) continue;
    r.hypothesis_passing++;
    if (!classify_cached(s, k, Pred::GradedPrime).holds)
      r.violations.push_back(Json{{"K", subj(s, k)}});
  }
}

bool two_maximal_hypothesis(StructCtx& s) {
  if (!is_graded_multiplication(s).holds) return false;
  int whole = s.whole_index();
  for (int k = 0; k < whole; ++k)
    if (!classify_cached(s, k, Pred::GradedWeaklyPrime).holds) return false;
  return true;
}

void thm_two_maximal(StructCtx& s, TheoremReport& r) {
  r.instances_checked++;
  if (!two_maximal_hypothesis(s)) return;
  r.hypothesis_passing++;
  const Lattice& lat = s.graded_submodules();
  int count = 0;
  for (int k = 0; k < int(lat.items.size()); ++k)
    if (is_maximal_graded(lat, k)) ++count;
  if (count > 2)
    r.violations.push_back(Json{{"maximal_count", count}});
}

void cor_comparable_or_zero(StructCtx& s, TheoremReport& r) {
  if (!two_maximal_hypothesis(s)) {
    r.instances_checked++;
    return;
  }
  const Lattice& ideals = s.graded_two_sided_ideals();
  const GradedModule& m = s.M();
  for (size_t ii = 0; ii < ideals.items.size(); ++ii)
    for (size_t ji = 0; ji < ideals.items.size(); ++ji) {
      r.instances_checked++;
      const Substructure& I = ideals.items[ii];
      const Substructure& J = ideals.items[ji];
      auto im_of = [&](const Substructure& ideal) {
        std::vector<uint32_t> products;
        for (uint32_t u : ideal.addgens)
          for (uint32_t b : s.module_addgens()) products.push_back(m.act(u, b));
        return close_submodule(m, products);
      };
      Substructure X = im_of(I);
      Substructure Y = im_of(J);
      if (X.set == Y.set) continue;
      r.hypothesis_passing++;
      if (X.set.subset_of(Y.set) || Y.set.subset_of(X.set)) continue;
      bool iy = product_contained(m, I.addgens, Y.addgens, [&] {
        DenseSet zero(m.size());
        zero.set(0);
        return zero;
      }());
      DenseSet zero(m.size());
      zero.set(0);
      bool jx = product_contained(m, J.addgens, X.addgens, zero);
      if (!iy || !jx)
        r.violations.push_back(Json{{"I", sub_json(s.A().ring().group(), I)},
                                    {"J", sub_json(s.A().ring().group(), J)},
                                    {"X", sub_json(m.group(), X)},
                                    {"Y", sub_json(m.group(), Y)}});
    }
}

// ---------------------------------------------------------------------------
// Duo-ring theorems
// ---------------------------------------------------------------------------

void thm_duo_completely(StructCtx& s, TheoremReport& r) {
  if (!is_left_duo(s).holds) {
    r.instances_checked++;
    return;
  }
  const Lattice& lat = s.graded_submodules();
  int whole = s.whole_index();
  const auto& ha = s.A().homogeneous_elements();
  const auto& hm = s.M().homogeneous_elements();
  const auto& t = s.completely_triples();
  const auto& prods = s.sandwich_products();
  size_t na = ha.size(), nm = hm.size();
  uint32_t kr = s.A().ring().rank();
  // Cyclic submodule A*m per homogeneous m, as a lattice index.
  std::vector<int> cyc(nm);
  for (size_t zi = 0; zi < nm; ++zi) {
    uint32_t gens[1] = {hm[zi]};
    cyc[zi] = s.submodule_index(close_submodule(s.M(), gens).set);
    if (cyc[zi] < 0) throw std::logic_error("cyclic submodule missing from lattice");
  }
  for (int k = 0; k < whole; ++k) {
    if (!is_cwp(s, k)) {
      r.instances_checked++;
      continue;
    }
    const Substructure& K = lat.items[size_t(k)];
    for (size_t xi = 0; xi < na; ++xi)
      for (size_t yi = 0; yi < na; ++yi) {
        const uint32_t* xyz = &t.xyz[(xi * na + yi) * nm];
        const uint32_t* pr = &prods[(xi * na + yi) * kr];
        for (size_t zi = 0; zi < nm; ++zi) {
          r.instances_checked++;
          bool in_k = K.set.test(xyz[zi]);
          bool xz_in = K.set.test(t.xz[xi * nm + zi]);
          bool yz_in = K.set.test(t.yz[yi * nm + zi]);
          if (xyz[zi] != 0 && in_k) {
            r.hypothesis_passing++;
            if (!xz_in && !yz_in)
              r.violations.push_back(Json{{"K", subj(s, k)},
                                          {"x", elemj(s, ha[xi])},
                                          {"y", elemj(s, ha[yi])},
                                          {"m", melemj(s, hm[zi])},
                                          {"variant", "nonzero-product"}});
          }
          if (in_k) {
            // Corollary: xym in K and (x, y, Am) not a triple zero.
            int li = cyc[zi];
            const DenseSet& colon = s.colon_kl(k, li);
            bool tz = xayl_zero(s, pr, kr, li) && !colon.test(ha[xi]) &&
                      !colon.test(ha[yi]);
            if (!tz) {
              r.hypothesis_passing++;
              if (!xz_in && !yz_in)
                r.violations.push_back(Json{{"K", subj(s, k)},
                                            {"x", elemj(s, ha[xi])},
                                            {"y", elemj(s, ha[yi])},
                                            {"m", melemj(s, hm[zi])},
                                            {"variant", "non-triple-zero"}});
            }
          }
        }
      }
  }
}

void thm_duo_chain(StructCtx& s, TheoremReport& r, const VerifyOptions& opt) {
  uint32_t ng = s.A().grading_group().size();
  const Lattice& lat = s.graded_submodules();
  const FiniteRing& ring = s.A().ring();
  for (uint32_t g = 0; g < ng; ++g) {
    auto& comp = s.component(g);
    const GradedModule& mg = *comp.view.module;
    if (mg.size() <= 1) {
      r.instances_checked += lat.items.size();
      continue;
    }
    bool duo = is_left_duo(*comp.ctx).holds;
    size_t nlat = comp.ctx->all_submodules().items.size();
    uint32_t bound = nlat <= opt.u_exhaustive_limit ? uint32_t(nlat)
                                                    : opt.u_cover_bound;
    Verdict uv = is_u_module(*comp.ctx, std::max(bound, 2u));
    bool u_complete = uv.notes.at("complete").get<bool>();
    r.notes = Json{{"u_cover_bound", std::max(bound, 2u)}};

    const Lattice& subs = comp.ctx->graded_submodules();
    const Lattice& ideals = comp.ctx->graded_two_sided_ideals();
    uint32_t ne = comp.view.ring->ring().size();

    for (int k = 0; k < int(lat.items.size()); ++k) {
      r.instances_checked++;
      const Substructure& K = lat.items[size_t(k)];
      if (!duo || !uv.holds || !component_proper(comp, K)) continue;

      // Colon sets (K :_{M_g} r), memoized over r in A_e.
      std::vector<std::optional<DenseSet>> colon_mod(ne);
      auto colon_mod_of = [&](uint32_t re) -> const DenseSet& {
        if (!colon_mod[re]) {
          DenseSet out(mg.size());
          uint32_t rp = comp.view.ring_embed[re];
          for (uint32_t j = 0; j < mg.size(); ++j)
            if (K.set.test(s.M().act(rp, comp.view.mod_embed[j]))) out.set(j);
          colon_mod[re] = std::move(out);
        }
        return *colon_mod[re];
      };
      // Colon sets over A_e: (K :_{A_e} X) for X given by parent generators.
      auto colon_ring_of = [&](const std::vector<uint32_t>& xgens) {
        DenseSet out(ne);
        for (uint32_t ae = 0; ae < ne; ++ae) {
          uint32_t ap = comp.view.ring_embed[ae];
          bool ok = true;
          for (uint32_t w : xgens)
            if (!K.set.test(s.M().act(ap, w))) {
              ok = false;
              break;
            }
          if (ok) out.set(ae);
        }
        return out;
      };
      auto zero_ring_of = [&](const std::vector<uint32_t>& xgens) {
        DenseSet out(ne);
        for (uint32_t ae = 0; ae < ne; ++ae) {
          uint32_t ap = comp.view.ring_embed[ae];
          bool ok = true;
          for (uint32_t w : xgens)
            if (s.M().act(ap, w) != 0) {
              ok = false;
              break;
            }
          if (ok) out.set(ae);
        }
        return out;
      };

      bool st[8] = {false};
      // (1) g-classical weakly prime
      st[1] = g_cwp(s, k, g);
      // (2) elementwise
      st[2] = true;
      for (uint32_t xe = 0; xe < ne && st[2]; ++xe)
        for (uint32_t ye = 0; ye < ne && st[2]; ++ye) {
          uint32_t xy = ring.mul(comp.view.ring_embed[xe], comp.view.ring_embed[ye]);
          for (uint32_t j = 0; j < mg.size(); ++j) {
            uint32_t mm = comp.view.mod_embed[j];
            uint32_t w = s.M().act(xy, mm);
            if (w == 0 || !K.set.test(w)) continue;
            if (!K.set.test(s.M().act(comp.view.ring_embed[xe], mm)) &&
                !K.set.test(s.M().act(comp.view.ring_embed[ye], mm))) {
              st[2] = false;
              break;
            }
          }
        }
      // (3) (K:xy) = (0:xy) or (K:x) or (K:y) inside M_g
      st[3] = true;
      for (uint32_t xe = 0; xe < ne && st[3]; ++xe)
        for (uint32_t ye = 0; ye < ne && st[3]; ++ye) {
          uint32_t xyp = ring.mul(comp.view.ring_embed[xe], comp.view.ring_embed[ye]);
          DenseSet kxy(mg.size()), zxy(mg.size());
          for (uint32_t j = 0; j < mg.size(); ++j) {
            uint32_t w = s.M().act(xyp, comp.view.mod_embed[j]);
            if (K.set.test(w)) kxy.set(j);
            if (w == 0) zxy.set(j);
          }
          if (!(kxy == zxy) && !(kxy == colon_mod_of(xe)) && !(kxy == colon_mod_of(ye)))
            st[3] = false;
        }
      // (4) 0 != xyL <= K  =>  xL <= K or yL <= K
      st[4] = true;
      for (uint32_t xe = 0; xe < ne && st[4]; ++xe)
        for (uint32_t ye = 0; ye < ne && st[4]; ++ye) {
          uint32_t xp = comp.view.ring_embed[xe], yp = comp.view.ring_embed[ye];
          uint32_t xyp = ring.mul(xp, yp);
          for (size_t li = 0; li < subs.items.size(); ++li) {
            const auto& lg = comp.sub_embgens[li];
            bool contained = true, zero = true;
            for (uint32_t w : lg) {
              uint32_t ww = s.M().act(xyp, w);
              if (ww != 0) zero = false;
              if (!K.set.test(ww)) {
                contained = false;
                break;
              }
            }
            if (!contained || zero) continue;
            auto in_k = [&](uint32_t a) {
              for (uint32_t w : lg)
                if (!K.set.test(s.M().act(a, w))) return false;
              return true;
            };
            if (!in_k(xp) && !in_k(yp)) {
              st[4] = false;
              break;
            }
          }
        }
      // (5) xL not<= K  =>  (K : xL) = (0 : xL) or (K : L), colons over A_e
      st[5] = true;
      for (uint32_t xe = 0; xe < ne && st[5]; ++xe) {
        uint32_t xp = comp.view.ring_embed[xe];
        for (size_t li = 0; li < subs.items.size(); ++li) {
          const auto& lg = comp.sub_embgens[li];
          std::vector<uint32_t> xl;
          for (uint32_t w : lg) xl.push_back(s.M().act(xp, w));
          bool xl_in_k = true;
          for (uint32_t w : xl)
            if (!K.set.test(w)) {
              xl_in_k = false;
              break;
            }
          if (xl_in_k) continue;
          DenseSet kxl = colon_ring_of(xl);
          if (!(kxl == zero_ring_of(xl)) && !(kxl == colon_ring_of(lg))) {
            st[5] = false;
            break;
          }
        }
      }
      // (6) 0 != IxL <= K  =>  IL <= K or xL <= K
      st[6] = true;
      for (uint32_t xe = 0; xe < ne && st[6]; ++xe) {
        uint32_t xp = comp.view.ring_embed[xe];
        for (size_t ii = 0; ii < ideals.items.size() && st[6]; ++ii) {
          const auto& ig = comp.ideal_embgens[ii];
          for (size_t li = 0; li < subs.items.size(); ++li) {
            const auto& lg = comp.sub_embgens[li];
            bool contained = true, zero = true;
            for (uint32_t u : ig)
              for (uint32_t w : lg) {
                uint32_t ww = s.M().act(ring.mul(u, xp), w);
                if (ww != 0) zero = false;
                if (!K.set.test(ww)) contained = false;
              }
            if (!contained || zero) continue;
            bool il = product_contained(s.M(), ig, lg, K.set);
            bool xl = product_contained(s.M(), std::vector<uint32_t>{xp}, lg, K.set);
            if (!il && !xl) {
              st[6] = false;
              break;
            }
          }
        }
      }
      // (7) IL not<= K  =>  (K : IL) = (0 : IL) or (K : L)
      st[7] = true;
      for (size_t ii = 0; ii < ideals.items.size() && st[7]; ++ii) {
        const auto& ig = comp.ideal_embgens[ii];
        for (size_t li = 0; li < subs.items.size(); ++li) {
          const auto& lg = comp.sub_embgens[li];
          std::vector<uint32_t> il;
          for (uint32_t u : ig)
            for (uint32_t w : lg) il.push_back(s.M().act(u, w));
          bool il_in_k = true;
          for (uint32_t w : il)
            if (!K.set.test(w)) {
              il_in_k = false;
              break;
            }
          if (il_in_k) continue;
          DenseSet kil = colon_ring_of(il);
          if (!(kil == zero_ring_of(il)) && !(kil == colon_ring_of(lg))) {
            st[7] = false;
            break;
          }
        }
      }

      bool chain_ok = true;
      int bad_step = 0;
      for (int i = 1; i <= 6; ++i)
        if (st[i] && !st[i + 1]) {
          chain_ok = false;
          bad_step = i;
          break;
        }
      if (u_complete) {
        r.hypothesis_passing++;
        if (!chain_ok)
          r.violations.push_back(Json{{"component", int(g)},
                                      {"K", subj(s, k)},
                                      {"implication", std::to_string(bad_step) + "=>" +
                                                          std::to_string(bad_step + 1)}});
      } else {
        r.undetermined++;
        if (!chain_ok)
          r.undetermined_cases.push_back(
              Json{{"component", int(g)},
                   {"K", subj(s, k)},
                   {"implication", std::to_string(bad_step) + "=>" +
                                       std::to_string(bad_step + 1)},
                   {"reason", "u-module check not exhaustive"}});
      }
    }
  }
}

void prop_radical_equality(StructCtx& s, TheoremReport& r) {
  int whole = s.whole_index();
  uint32_t e = s.A().grading_group().identity();
  auto& comp = s.component(e);
  if (!is_left_duo(*comp.ctx).holds) {
    r.instances_checked += uint64_t(whole);
    return;
  }
  for (int k = 0; k < whole; ++k) {
    r.instances_checked++;
    if (!is_cwp(s, k)) continue;
    bool found_e_tz = false;
    for_each_triple_zero(s, k, [&](const TzScan& tz) {
      auto dx = s.A().degree_of(tz.x);
      auto dy = s.A().degree_of(tz.y);
      if (dx && dy && *dx == e && *dy == e) {
        found_e_tz = true;
        return false;
      }
      return true;
    });
    if (!found_e_tz) continue;
    r.hypothesis_passing++;
    Substructure ann = sub_from_set(comp.view.ring->ring().group(),
                                    comp_restrict_ring(comp, s.ann_module()),
                                    SubKind::TwoSidedIdeal);
    Substructure colon = sub_from_set(comp.view.ring->ring().group(),
                                      comp_restrict_ring(comp, s.colon_km(k)),
                                      SubKind::TwoSidedIdeal);
    Substructure rad_ann = graded_radical(*comp.ctx, ann);
    Substructure rad_colon = graded_radical(*comp.ctx, colon);
    if (!(rad_ann.set == rad_colon.set))
      r.violations.push_back(
          Json{{"K", subj(s, k)},
               {"rad_ann", sub_json(comp.view.ring->ring().group(), rad_ann)},
               {"rad_colon", sub_json(comp.view.ring->ring().group(), rad_colon)}});
  }
}

}  // namespace

const std::vector<std::string>& theorem_ids() { return kTheoremIds; }

bool is_theorem_id(const std::string& id) {
  return std::find(kTheoremIds.begin(), kTheoremIds.end(), id) != kTheoremIds.end();
}

TheoremReport verify_theorem(StructCtx& ctx, const std::string& theorem_id,
                             const VerifyOptions& opt) {
  TheoremReport r;
  r.theorem_id = theorem_id;
  r.structure = ctx.name();
  if (theorem_id == "thm-faithful-equivalence") thm_faithful_equivalence(ctx, r);
  else if (theorem_id == "cor-xIL") cor_xil(ctx, r);
  else if (theorem_id == "thm-colon-L-Kg") thm_colon_l(ctx, r, false);
  else if (theorem_id == "thm-colon-L-K") thm_colon_l(ctx, r, true);
  else if (theorem_id == "thm-ann-colon") thm_ann_colon(ctx, r);
  else if (theorem_id == "thm-hom-preimage") thm_hom_preimage(ctx, r);
  else if (theorem_id == "thm-hom-image") thm_hom_image(ctx, r, false);
  else if (theorem_id == "thm-quotient-down") thm_hom_image(ctx, r, true);
  else if (theorem_id == "thm-quotient-up") thm_quotient_up(ctx, r);
  else if (theorem_id == "prop-2abs-colon") prop_2abs_colon(ctx, r);
  else if (theorem_id == "prop-triple-zero-exists") prop_triple_zero_exists(ctx, r);
  else if (theorem_id == "prop-non-triple-zero") prop_non_triple_zero(ctx, r);
  else if (theorem_id == "prop-IJL-components") prop_ijl_components(ctx, r);
  else if (theorem_id == "thm-triple-zero-consequences")
    thm_triple_zero_consequences(ctx, r);
  else if (theorem_id == "prop-cube-ann") prop_cube_ann(ctx, r);
  else if (theorem_id == "thm-product-projection") thm_product(ctx, r, opt, false);
  else if (theorem_id == "thm-product-triple-ann") thm_product(ctx, r, opt, true);
  else if (theorem_id == "lem-maximal-prime") lem_maximal_prime(ctx, r);
  else if (theorem_id == "thm-two-maximal") thm_two_maximal(ctx, r);
  else if (theorem_id == "cor-comparable-or-zero") cor_comparable_or_zero(ctx, r);
  else if (theorem_id == "thm-duo-completely") thm_duo_completely(ctx, r);
  else if (theorem_id == "thm-duo-chain") thm_duo_chain(ctx, r, opt);
  else if (theorem_id == "prop-radical-equality") prop_radical_equality(ctx, r);
  else throw ValidationError("unknown theorem id: " + theorem_id);
  return r;
}

uint64_t SuiteResult::total_violations() const {
  uint64_t n = 0;
  for (const auto& r : reports) n += r.violations.size();
  return n;
}

std::map<std::string, uint64_t> SuiteResult::adequacy() const {
  std::map<std::string, uint64_t> m;
  for (const auto& r : reports) m[r.theorem_id] += r.hypothesis_passing;
  return m;
}

SuiteResult run_corpus(std::vector<CorpusEntry>& corpus,
                       const std::vector<std::string>& suite,
                       const VerifyOptions& opt, uint32_t workers) {
  std::vector<std::string> ids = suite.empty() ? kTheoremIds : suite;
  for (const auto& id : ids)
    if (!is_theorem_id(id)) throw ValidationError("unknown theorem id: " + id);

  std::vector<std::vector<TheoremReport>> per_structure(corpus.size());
  auto run_one = [&](size_t i) {
    std::vector<TheoremReport> out;
    for (const auto& id : ids) out.push_back(verify_theorem(*corpus[i].ctx, id, opt));
    return out;
  };
  if (workers <= 1 || corpus.size() <= 1) {
    for (size_t i = 0; i < corpus.size(); ++i) per_structure[i] = run_one(i);
  } else {
    size_t next = 0;
    std::mutex mu;
    auto worker = [&]() {
      while (true) {
        size_t i;
        {
          std::lock_guard<std::mutex> lk(mu);
          if (next >= corpus.size()) return;
          i = next++;
        }
        per_structure[i] = run_one(i);
      }
    };
    std::vector<std::thread> threads;
    for (uint32_t w = 0; w < std::min<uint32_t>(workers, uint32_t(corpus.size())); ++w)
      threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  SuiteResult res;
  for (auto& reports : per_structure)
    for (auto& r : reports) res.reports.push_back(std::move(r));
  return res;
}

SearchResult search_separating_example(std::vector<CorpusEntry>& family, Pred holds,
                                       Pred fails) {
  if (pred_is_component_pred(holds) || pred_is_component_pred(fails))
    throw ValidationError("separating-example search covers submodule and ideal predicates");
  SearchResult res;
  for (auto& entry : family) {
    StructCtx& ctx = *entry.ctx;
    const Lattice& lat = ctx.graded_submodules();
    for (int k = 0; k < int(lat.items.size()); ++k) {
      res.examined++;
      const Verdict& a = classify_cached(ctx, k, holds);
      if (!a.holds) continue;
      const Verdict& b = classify_cached(ctx, k, fails);
      if (b.holds) continue;
      if (!b.hypothesis_failure.is_null()) continue;
      res.found = true;
      res.instance = Json{{"structure", entry.name},
                          {"submodule", sub_json(ctx.M().group(), lat.items[size_t(k)])},
                          {"holds", a.to_json()},
                          {"fails", b.to_json()}};
      return res;
    }
  }
  return res;
}

}  // namespace gralab

#include "gralab/classify.hpp"

#include <algorithm>

namespace gralab {

bool product_contained(const GradedModule& m, std::span<const uint32_t> ring_gens,
                       std::span<const uint32_t> mod_gens, const DenseSet& k) {
  for (uint32_t u : ring_gens)
    for (uint32_t v : mod_gens)
      if (!k.test(m.act(u, v))) return false;
  return true;
}

bool product_nonzero(const GradedModule& m, std::span<const uint32_t> ring_gens,
                     std::span<const uint32_t> mod_gens) {
  for (uint32_t u : ring_gens)
    for (uint32_t v : mod_gens)
      if (m.act(u, v) != 0) return true;
  return false;
}

bool subset_by_gens(std::span<const uint32_t> gens, const DenseSet& s) {
  for (uint32_t g : gens)
    if (!s.test(g)) return false;
  return true;
}

namespace {

Verdict make_verdict(Pred p, bool holds) {
  Verdict v;
  v.predicate = pred_name(p);
  v.holds = holds;
  return v;
}

Verdict hypothesis_fail(Pred p, const std::string& why) {
  Verdict v = make_verdict(p, false);
  v.hypothesis_failure = why;
  return v;
}

void check_witness_sound(StructCtx& ctx, Pred p, const Substructure& k,
                         std::optional<uint32_t> g, const Verdict& v) {
  if (v.holds || !v.hypothesis_failure.is_null()) return;
  if (!validate_witness(ctx, p, k, g, v.witness))
    throw std::logic_error(std::string("witness for ") + pred_name(p) +
                           " fails the naive definitional re-check");
}

// Closed substructure from parent-coordinate generator lists in a witness.
std::vector<uint32_t> parse_elems(const AddGroup& ag, const Json& arr) {
  std::vector<uint32_t> out;
  for (const Json& e : arr) {
    Coords c = e.get<Coords>();
    out.push_back(ag.encode(c));
  }
  return out;
}

// The additive subgroup generated by {x*a*y : a in A}, as a member list of
// its distinct generators (the full set xAy streamed over all of A).
std::vector<uint32_t> xay_products(const FiniteRing& r, uint32_t x, uint32_t y,
                                   const std::vector<uint32_t>* middle) {
  DenseSet seen(r.size());
  std::vector<uint32_t> out;
  auto push = [&](uint32_t a) {
    uint32_t p = r.mul(r.mul(x, a), y);
    if (!seen.test(p)) {
      seen.set(p);
      out.push_back(p);
    }
  };
  if (middle) {
    for (uint32_t a : *middle) push(a);
  } else {
    for (uint32_t a = 0; a < r.size(); ++a) push(a);
  }
  return out;
}

}  // namespace

Verdict classify_submodule(StructCtx& ctx, int k_idx, Pred p) {
  const Lattice& lat = ctx.graded_submodules();
  const Substructure& K = lat.items[size_t(k_idx)];
  const GradedModule& m = ctx.M();
  if (k_idx == ctx.whole_index())
    return hypothesis_fail(p, "submodule is not proper");

  Verdict v = make_verdict(p, true);
  const auto& ha = ctx.A().homogeneous_elements();
  size_t na = ha.size();
  uint32_t kr = ctx.A().ring().rank();

  switch (p) {
    case Pred::GradedPrime:
    case Pred::GradedWeaklyPrime: {
      const Lattice& ideals = ctx.graded_two_sided_ideals();
      const DenseSet& colon = ctx.colon_km(k_idx);
      for (size_t ii = 0; ii < ideals.items.size() && v.holds; ++ii) {
        const Substructure& I = ideals.items[ii];
        for (size_t li = 0; li < lat.items.size(); ++li) {
          const Substructure& L = lat.items[li];
          if (!product_contained(m, I.addgens, L.addgens, K.set)) continue;
          if (p == Pred::GradedWeaklyPrime &&
              !product_nonzero(m, I.addgens, L.addgens))
            continue;
          if (L.set.subset_of(K.set)) continue;
          if (subset_by_gens(I.addgens, colon)) continue;
          v.holds = false;
          v.witness = Json{{"I", sub_json(ctx.A().ring().group(), I)},
                           {"L", sub_json(m.group(), L)}};
          break;
        }
      }
      break;
    }
    case Pred::GradedClassicalPrime:
    case Pred::GradedClassicalWeaklyPrime:
    case Pred::GradedWeakly2Absorbing: {
      const auto& prods = ctx.sandwich_products();
      const DenseSet* colon_km = nullptr;
      if (p == Pred::GradedWeakly2Absorbing) colon_km = &ctx.colon_km(k_idx);
      std::vector<const DenseSet*> colons(lat.items.size()), anns(lat.items.size());
      for (size_t li = 0; li < lat.items.size(); ++li) {
        colons[li] = &ctx.colon_kl(k_idx, int(li));
        anns[li] = &ctx.ann_l(int(li));
      }
      for (size_t xi = 0; xi < na && v.holds; ++xi)
        for (size_t yi = 0; yi < na && v.holds; ++yi) {
          const uint32_t* pr = &prods[(xi * na + yi) * kr];
          for (size_t li = 0; li < lat.items.size(); ++li) {
            bool contained = true;
            for (uint32_t i = 0; i < kr; ++i)
              if (!colons[li]->test(pr[i])) {
                contained = false;
                break;
              }
            if (!contained) continue;
            if (p != Pred::GradedClassicalPrime) {
              bool zero = true;
              for (uint32_t i = 0; i < kr; ++i)
                if (!anns[li]->test(pr[i])) {
                  zero = false;
                  break;
                }
              if (zero) continue;
            }
            if (colons[li]->test(ha[xi]) || colons[li]->test(ha[yi])) continue;
            if (p == Pred::GradedWeakly2Absorbing) {
              bool in_colon_km = true;
              for (uint32_t i = 0; i < kr; ++i)
                if (!colon_km->test(pr[i])) {
                  in_colon_km = false;
                  break;
                }
              if (in_colon_km) continue;
            }
            v.holds = false;
            v.witness = Json{{"x", elem_json(ctx.A().ring().group(), ha[xi])},
                             {"y", elem_json(ctx.A().ring().group(), ha[yi])},
                             {"L", sub_json(m.group(), lat.items[li])}};
            break;
          }
        }
      break;
    }
    case Pred::GradedCompletelyClassicalWeaklyPrime:
    case Pred::GradedCompletelyWeakly2Absorbing: {
      const auto& t = ctx.completely_triples();
      const auto& hm = m.homogeneous_elements();
      size_t nm = hm.size();
      const DenseSet* colon_km = nullptr;
      if (p == Pred::GradedCompletelyWeakly2Absorbing)
        colon_km = &ctx.colon_km(k_idx);
      const FiniteRing& r = ctx.A().ring();
      for (size_t xi = 0; xi < na && v.holds; ++xi)
        for (size_t yi = 0; yi < na && v.holds; ++yi) {
          const uint32_t* xyz = &t.xyz[(xi * na + yi) * nm];
          const uint32_t* xz = &t.xz[xi * nm];
          const uint32_t* yz = &t.yz[yi * nm];
          for (size_t zi = 0; zi < nm; ++zi) {
            uint32_t w = xyz[zi];
            if (w == 0 || !K.set.test(w)) continue;
            if (K.set.test(xz[zi]) || K.set.test(yz[zi])) continue;
            if (colon_km && colon_km->test(r.mul(ha[xi], ha[yi]))) continue;
            v.holds = false;
            v.witness = Json{{"x", elem_json(r.group(), ha[xi])},
                             {"y", elem_json(r.group(), ha[yi])},
                             {"z", elem_json(m.group(), hm[zi])}};
            break;
          }
        }
      break;
    }
    default:
      throw ValidationError(std::string(pred_name(p)) +
                            " is not a graded-submodule predicate");
  }
  check_witness_sound(ctx, p, K, std::nullopt, v);
  return v;
}

Verdict classify_ideal(StructCtx& ctx, const Substructure& P, Pred p) {
  const FiniteRing& r = ctx.A().ring();
  // Kind checks: P must be a left ideal (graded for the graded predicates).
  for (uint32_t u : P.addgens)
    for (uint32_t i = 0; i < r.rank(); ++i)
      if (!P.set.test(r.mul(r.group().basis_element(i), u)))
        throw ValidationError("substructure is not a left ideal");
  if (p != Pred::WeaklyPrimeLeftIdeal && !is_graded(ctx.A(), P))
    throw ValidationError("substructure is not a graded left ideal");
  if (P.size() == r.size()) return hypothesis_fail(p, "ideal is not proper");

  Verdict v = make_verdict(p, true);
  switch (p) {
    case Pred::GradedPrimeIdeal:
    case Pred::GradedWeaklyPrimeIdeal: {
      const Lattice& li = ctx.graded_left_ideals();
      for (size_t ii = 0; ii < li.items.size() && v.holds; ++ii)
        for (size_t ji = 0; ji < li.items.size(); ++ji) {
          const Substructure& I = li.items[ii];
          const Substructure& J = li.items[ji];
          bool contained = true, zero = true;
          for (uint32_t u : I.addgens) {
            for (uint32_t w : J.addgens) {
              uint32_t pr = r.mul(u, w);
              if (pr != 0) zero = false;
              if (!P.set.test(pr)) {
                contained = false;
                break;
              }
            }
            if (!contained) break;
          }
          if (!contained) continue;
          if (p == Pred::GradedWeaklyPrimeIdeal && zero) continue;
          if (subset_by_gens(I.addgens, P.set) || subset_by_gens(J.addgens, P.set))
            continue;
          v.holds = false;
          v.witness = Json{{"I", sub_json(r.group(), I)},
                           {"J", sub_json(r.group(), J)}};
          break;
        }
      break;
    }
    case Pred::GradedWeaklyPrimeElementwise: {
      const auto& ha = ctx.A().homogeneous_elements();
      const auto& prods = ctx.sandwich_products();
      size_t na = ha.size();
      uint32_t kr = r.rank();
      for (size_t xi = 0; xi < na && v.holds; ++xi)
        for (size_t yi = 0; yi < na; ++yi) {
          const uint32_t* pr = &prods[(xi * na + yi) * kr];
          bool contained = true, zero = true;
          for (uint32_t i = 0; i < kr; ++i) {
            if (pr[i] != 0) zero = false;
            if (!P.set.test(pr[i])) {
              contained = false;
              break;
            }
          }
          if (!contained || zero) continue;
          if (P.set.test(ha[xi]) || P.set.test(ha[yi])) continue;
          v.holds = false;
          v.witness = Json{{"x", elem_json(r.group(), ha[xi])},
                           {"y", elem_json(r.group(), ha[yi])}};
          break;
        }
      break;
    }
    case Pred::WeaklyPrimeLeftIdeal: {
      const Lattice& ideals = ctx.all_two_sided_ideals();
      for (size_t ii = 0; ii < ideals.items.size() && v.holds; ++ii)
        for (size_t ji = 0; ji < ideals.items.size(); ++ji) {
          const Substructure& I = ideals.items[ii];
          const Substructure& J = ideals.items[ji];
          bool contained = true, zero = true;
          for (uint32_t u : I.addgens) {
            for (uint32_t w : J.addgens) {
              uint32_t pr = r.mul(u, w);
              if (pr != 0) zero = false;
              if (!P.set.test(pr)) {
                contained = false;
                break;
              }
            }
            if (!contained) break;
          }
          if (!contained || zero) continue;
          if (subset_by_gens(I.addgens, P.set) || subset_by_gens(J.addgens, P.set))
            continue;
          v.holds = false;
          v.witness = Json{{"I", sub_json(r.group(), I)},
                           {"J", sub_json(r.group(), J)}};
          break;
        }
      break;
    }
    default:
      throw ValidationError(std::string(pred_name(p)) + " is not an ideal predicate");
  }
  if (!v.holds && v.hypothesis_failure.is_null()) {
    if (!validate_witness(ctx, p, P, std::nullopt, v.witness))
      throw std::logic_error("ideal witness fails the naive re-check");
  }
  return v;
}

Verdict classify_component(StructCtx& ctx, int k_idx, uint32_t g, Pred p) {
  const Lattice& lat = ctx.graded_submodules();
  const Substructure& K = lat.items[size_t(k_idx)];
  const GradedModule& m = ctx.M();
  StructCtx::Component& comp = ctx.component(g);

  // Properness of the component: K_g != M_g.
  bool kg_full = true;
  for (uint32_t x : comp.view.mod_embed)
    if (!K.set.test(x)) {
      kg_full = false;
      break;
    }
  if (kg_full)
    return hypothesis_fail(p, "component of K equals the whole component");

  Verdict v = make_verdict(p, true);
  const Lattice& comp_subs = comp.ctx->graded_submodules();
  const FiniteRing& r = ctx.A().ring();

  switch (p) {
    case Pred::GPrime: {
      const Lattice& comp_ideals = comp.ctx->graded_two_sided_ideals();
      const DenseSet& colon = ctx.colon_km(k_idx);
      for (size_t ii = 0; ii < comp_ideals.items.size() && v.holds; ++ii)
        for (size_t li = 0; li < comp_subs.items.size(); ++li) {
          const auto& ig = comp.ideal_embgens[ii];
          const auto& lg = comp.sub_embgens[li];
          if (!product_contained(m, ig, lg, K.set)) continue;
          if (subset_by_gens(lg, K.set)) continue;
          if (subset_by_gens(ig, colon)) continue;
          v.holds = false;
          v.witness =
              Json{{"I", Json{{"generators", gens_json(r.group(), ig)},
                              {"size", comp_ideals.items[ii].size()}}},
                   {"L", Json{{"generators", gens_json(m.group(), lg)},
                              {"size", comp_subs.items[li].size()}}}};
          break;
        }
      break;
    }
    case Pred::GClassicalWeaklyPrime: {
      // Precompute (K : L) and Ann(L) over the parent ring, per component L.
      std::vector<DenseSet> colons, anns;
      for (size_t li = 0; li < comp_subs.items.size(); ++li) {
        colons.push_back(colon_in_ring(m, K.set, comp.sub_embgens[li]));
        anns.push_back(annihilator_in_ring(m, comp.sub_embgens[li]));
      }
      uint32_t ne = comp.view.ring->ring().size();
      const auto& mid = comp.ring_basis_embedded;
      std::vector<uint32_t> pr(mid.size());
      for (uint32_t xe = 0; xe < ne && v.holds; ++xe) {
        uint32_t x = comp.view.ring_embed[xe];
        for (uint32_t ye = 0; ye < ne && v.holds; ++ye) {
          uint32_t y = comp.view.ring_embed[ye];
          for (size_t i = 0; i < mid.size(); ++i)
            pr[i] = r.mul(r.mul(x, mid[i]), y);
          for (size_t li = 0; li < comp_subs.items.size(); ++li) {
            bool contained = true, zero = true;
            for (uint32_t pi : pr) {
              if (!colons[li].test(pi)) {
                contained = false;
                break;
              }
            }
            if (!contained) continue;
            for (uint32_t pi : pr)
              if (!anns[li].test(pi)) {
                zero = false;
                break;
              }
            if (zero) continue;
            if (colons[li].test(x) || colons[li].test(y)) continue;
            v.holds = false;
            v.witness =
                Json{{"x", elem_json(r.group(), x)},
                     {"y", elem_json(r.group(), y)},
                     {"L", Json{{"generators", gens_json(m.group(), comp.sub_embgens[li])},
                                {"size", comp_subs.items[li].size()}}}};
            break;
          }
        }
      }
      break;
    }
    default:
      throw ValidationError(std::string(pred_name(p)) + " is not a component predicate");
  }
  check_witness_sound(ctx, p, K, g, v);
  return v;
}

const Verdict& classify_cached(StructCtx& ctx, int k_idx, Pred p, int g) {
  auto key = std::make_tuple(int(p), k_idx, g);
  auto it = ctx.verdict_memo.find(key);
  if (it != ctx.verdict_memo.end()) return it->second;
  Verdict v;
  if (pred_is_component_pred(p)) {
    v = classify_component(ctx, k_idx, uint32_t(g), p);
  } else if (pred_is_ideal_pred(p)) {
    // Only valid for the regular module, where graded submodules double as
    // graded left ideals of the ring.
    if (ctx.M().size() != ctx.A().ring().size())
      throw ValidationError("ideal predicates on lattice members need the regular module");
    v = classify_ideal(ctx, ctx.graded_submodules().items[size_t(k_idx)], p);
  } else {
    v = classify_submodule(ctx, k_idx, p);
  }
  return ctx.verdict_memo.emplace(key, std::move(v)).first->second;
}

std::optional<TripleZero> find_classical_triple_zero(StructCtx& ctx, int k_idx) {
  auto it = ctx.triple_zero_memo.find(k_idx);
  if (it != ctx.triple_zero_memo.end()) return it->second;
  const Lattice& lat = ctx.graded_submodules();
  if (k_idx == ctx.whole_index())
    throw ValidationError("triple zero requires a proper submodule");
  const auto& ha = ctx.A().homogeneous_elements();
  const auto& prods = ctx.sandwich_products();
  size_t na = ha.size();
  uint32_t kr = ctx.A().ring().rank();
  std::optional<TripleZero> out;
  for (size_t xi = 0; xi < na && !out; ++xi)
    for (size_t yi = 0; yi < na && !out; ++yi) {
      const uint32_t* pr = &prods[(xi * na + yi) * kr];
      for (size_t li = 0; li < lat.items.size(); ++li) {
        const DenseSet& ann = ctx.ann_l(int(li));
        bool zero = true;
        for (uint32_t i = 0; i < kr; ++i)
          if (!ann.test(pr[i])) {
            zero = false;
            break;
          }
        if (!zero) continue;
        const DenseSet& colon = ctx.colon_kl(k_idx, int(li));
        if (colon.test(ha[xi]) || colon.test(ha[yi])) continue;
        out = TripleZero{ha[xi], ha[yi], int(li)};
        break;
      }
    }
  ctx.triple_zero_memo.emplace(k_idx, out);
  if (out) {
    Json w = triple_zero_json(ctx, *out);
    if (!validate_triple_zero(ctx, lat.items[size_t(k_idx)], w))
      throw std::logic_error("triple zero fails the naive re-check");
  }
  return out;
}

Json triple_zero_json(StructCtx& ctx, const TripleZero& tz) {
  const Lattice& lat = ctx.graded_submodules();
  return Json{{"x", elem_json(ctx.A().ring().group(), tz.x)},
              {"y", elem_json(ctx.A().ring().group(), tz.y)},
              {"L", sub_json(ctx.M().group(), lat.items[size_t(tz.l_idx)])}};
}

bool is_faithful(StructCtx& ctx, const Substructure& l) {
  return annihilator_in_ring(ctx.M(), l.addgens).count() == 1;
}

bool all_nonzero_submodules_faithful(StructCtx& comp_ctx) {
  const Lattice& lat = comp_ctx.graded_submodules();
  for (const Substructure& l : lat.items) {
    if (l.is_zero()) continue;
    if (annihilator_in_ring(comp_ctx.M(), l.addgens).count() != 1) return false;
  }
  return true;
}

const Verdict& is_left_duo(StructCtx& ctx) {
  if (ctx.duo_memo) return *ctx.duo_memo;
  const FiniteRing& r = ctx.A().ring();
  Verdict v;
  v.predicate = "left-duo";
  v.holds = true;

  auto right_closure_failure = [&](const Substructure& I) -> std::optional<Json> {
    for (uint32_t u : I.addgens)
      for (uint32_t i = 0; i < r.rank(); ++i)
        if (!I.set.test(r.mul(u, r.group().basis_element(i))))
          return Json{{"left_ideal", sub_json(r.group(), I)},
                      {"element", elem_json(r.group(), u)},
                      {"right_multiplier_basis", i}};
    return std::nullopt;
  };

  // Principal left ideals first: the first failure settles the verdict
  // without enumerating the full lattice.
  for (uint32_t x = 0; x < r.size() && v.holds; ++x) {
    uint32_t gens[1] = {x};
    Substructure ax = close_left_ideal(r, gens);
    if (auto w = right_closure_failure(ax)) {
      v.holds = false;
      v.witness = *w;
    }
  }
  if (v.holds) {
    Lattice li = enumerate_all_left_ideals(r, ctx.caps().lattice);
    for (const Substructure& I : li.items) {
      if (auto w = right_closure_failure(I)) {
        v.holds = false;
        v.witness = *w;
        break;
      }
    }
  }
  if (v.holds) {
    // Consequence of the Duo property: xA <= Ax for every x.
    for (uint32_t x = 0; x < r.size(); ++x) {
      uint32_t gens[1] = {x};
      Substructure ax = close_left_ideal(r, gens);
      for (uint32_t i = 0; i < r.rank(); ++i)
        if (!ax.set.test(r.mul(x, r.group().basis_element(i))))
          throw std::logic_error("left Duo ring violates xA <= Ax");
    }
  }
  ctx.duo_memo = std::move(v);
  return *ctx.duo_memo;
}

Verdict is_u_module(StructCtx& ctx, uint32_t cover_bound) {
  if (cover_bound < 2) throw ValidationError("cover bound must be at least 2");
  const Lattice& lat = ctx.all_submodules();
  size_t n = lat.items.size();
  Verdict v;
  v.predicate = "u-module";
  v.holds = true;
  bool complete = cover_bound >= n;
  v.notes = Json{{"cover_bound", cover_bound}, {"complete", complete}};

  std::vector<uint32_t> combo;
  uint64_t budget = 5'000'000;
  DenseSet un(ctx.M().size());
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (!v.holds) return;
    if (depth >= 2) {
      if (budget-- == 0) throw CapExceeded("u-module cover search budget exhausted");
      DenseSet u(ctx.M().size());
      for (uint32_t ci : combo) u |= lat.items[ci].set;
      for (size_t ki = 0; ki < n; ++ki) {
        const Substructure& K = lat.items[ki];
        if (!K.set.subset_of(u)) continue;
        bool inside_one = false;
        for (uint32_t ci : combo)
          if (K.set.subset_of(lat.items[ci].set)) {
            inside_one = true;
            break;
          }
        if (!inside_one) {
          v.holds = false;
          Json cover = Json::array();
          for (uint32_t ci : combo) cover.push_back(sub_json(ctx.M().group(), lat.items[ci]));
          v.witness = Json{{"K", sub_json(ctx.M().group(), K)}, {"cover", cover}};
          return;
        }
      }
    }
    if (depth == cover_bound) return;
    for (size_t i = start; i < n && v.holds; ++i) {
      // Skip covers with comparable members; they reduce to smaller covers.
      bool comparable = false;
      for (uint32_t cj : combo)
        if (lat.items[i].set.subset_of(lat.items[cj].set) ||
            lat.items[cj].set.subset_of(lat.items[i].set)) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      combo.push_back(uint32_t(i));
      rec(i + 1, depth + 1);
      combo.pop_back();
    }
  };
  rec(0, 0);
  return v;
}

Verdict is_graded_multiplication(StructCtx& ctx) {
  const Lattice& lat = ctx.graded_submodules();
  const GradedModule& m = ctx.M();
  Verdict v;
  v.predicate = "graded-multiplication";
  v.holds = true;
  for (size_t ki = 0; ki < lat.items.size(); ++ki) {
    const auto& ig = ctx.colon_km_gens(int(ki));
    std::vector<uint32_t> products;
    for (uint32_t u : ig)
      for (uint32_t b : ctx.module_addgens()) products.push_back(m.act(u, b));
    Substructure im = close_submodule(m, products);
    if (!(im.set == lat.items[ki].set)) {
      v.holds = false;
      v.witness = Json{{"K", sub_json(m.group(), lat.items[ki])},
                       {"IM", sub_json(m.group(), im)}};
      break;
    }
  }
  return v;
}

Substructure graded_radical(StructCtx& ctx, const Substructure& ideal) {
  const FiniteRing& r = ctx.A().ring();
  if (!is_left_duo(ctx).holds)
    throw ValidationError("graded radical requires a left Duo ring");
  for (uint32_t u : ideal.addgens)
    for (uint32_t i = 0; i < r.rank(); ++i) {
      uint32_t b = r.group().basis_element(i);
      if (!ideal.set.test(r.mul(b, u)) || !ideal.set.test(r.mul(u, b)))
        throw ValidationError("graded radical requires a two-sided ideal");
    }
  if (!is_graded(ctx.A(), ideal))
    throw ValidationError("graded radical requires a graded ideal");

  // For homogeneous x the membership criterion degenerates to: some power of
  // x lies in the ideal. Powers cycle within |A| steps.
  DenseSet ok(r.size());
  for (uint32_t h : ctx.A().homogeneous_elements()) {
    uint32_t p = h;
    DenseSet seen(r.size());
    bool found = false;
    while (!seen.test(p)) {
      seen.set(p);
      if (ideal.set.test(p)) {
        found = true;
        break;
      }
      p = r.mul(p, h);
    }
    if (found) ok.set(h);
  }
  uint32_t ng = ctx.A().grading_group().size();
  Substructure out;
  out.kind = SubKind::TwoSidedIdeal;
  out.set = DenseSet(r.size());
  for (uint32_t x = 0; x < r.size(); ++x) {
    bool all_ok = true;
    for (uint32_t g = 0; g < ng && all_ok; ++g)
      if (!ok.test(ctx.A().part(x, g))) all_ok = false;
    if (all_ok) out.set.set(x);
  }
  out.members = out.set.to_list();
  out.addgens = extract_addgens(r.group(), out.members);
  out.seeds = out.addgens;

  // Internal invariants: a graded two-sided ideal containing the input.
  if (!ideal.set.subset_of(out.set))
    throw std::logic_error("graded radical does not contain its ideal");
  if (!is_graded(ctx.A(), out))
    throw std::logic_error("graded radical is not graded");
  for (uint32_t u : out.addgens)
    for (uint32_t i = 0; i < r.rank(); ++i) {
      uint32_t b = r.group().basis_element(i);
      if (!out.set.test(r.mul(b, u)) || !out.set.test(r.mul(u, b)))
        throw std::logic_error("graded radical is not a two-sided ideal");
    }
  return out;
}

bool validate_witness(StructCtx& ctx, Pred p, const Substructure& k,
                      std::optional<uint32_t> g, const Json& witness) {
  const GradedModule& m = ctx.M();
  const FiniteRing& r = ctx.A().ring();
  const AddGroup& rg = r.group();

  auto sub_from = [&](const Json& j, bool module_space) {
    std::vector<uint32_t> gens =
        parse_elems(module_space ? m.group() : rg, j.at("generators"));
    return gens;
  };

  switch (p) {
    case Pred::GradedPrime:
    case Pred::GradedWeaklyPrime: {
      std::vector<uint32_t> ig = sub_from(witness.at("I"), false);
      std::vector<uint32_t> lg = sub_from(witness.at("L"), true);
      Substructure I = close_two_sided_ideal(r, ig);
      Substructure L = close_submodule(m, lg);
      if (!is_graded(ctx.A(), I) || !is_graded(m, L)) return false;
      bool contained = true, zero = true;
      for (uint32_t a : I.members)
        for (uint32_t l : L.members) {
          uint32_t w = m.act(a, l);
          if (w != 0) zero = false;
          if (!k.set.test(w)) contained = false;
        }
      if (!contained) return false;
      if (p == Pred::GradedWeaklyPrime && zero) return false;
      if (L.set.subset_of(k.set)) return false;
      // I <= (K : M) iff I*M <= K.
      for (uint32_t a : I.members)
        for (uint32_t x = 0; x < m.size(); ++x)
          if (!k.set.test(m.act(a, x))) return true;
      return false;
    }
    case Pred::GradedClassicalPrime:
    case Pred::GradedClassicalWeaklyPrime:
    case Pred::GradedWeakly2Absorbing: {
      uint32_t x = rg.encode(witness.at("x").get<Coords>());
      uint32_t y = rg.encode(witness.at("y").get<Coords>());
      if (!ctx.A().is_homogeneous(x) || !ctx.A().is_homogeneous(y)) return false;
      Substructure L = close_submodule(m, sub_from(witness.at("L"), true));
      if (!is_graded(m, L)) return false;
      std::vector<uint32_t> prods = xay_products(r, x, y, nullptr);
      bool contained = true, zero = true;
      for (uint32_t pr : prods)
        for (uint32_t l : L.members) {
          uint32_t w = m.act(pr, l);
          if (w != 0) zero = false;
          if (!k.set.test(w)) contained = false;
        }
      if (!contained) return false;
      if (p != Pred::GradedClassicalPrime && zero) return false;
      auto xl_in = [&](uint32_t a) {
        for (uint32_t l : L.members)
          if (!k.set.test(m.act(a, l))) return false;
        return true;
      };
      if (xl_in(x) || xl_in(y)) return false;
      if (p == Pred::GradedWeakly2Absorbing) {
        // x*A*y <= (K : M) must fail.
        for (uint32_t pr : prods)
          for (uint32_t mm = 0; mm < m.size(); ++mm)
            if (!k.set.test(m.act(pr, mm))) return true;
        return false;
      }
      return true;
    }
    case Pred::GradedCompletelyClassicalWeaklyPrime:
    case Pred::GradedCompletelyWeakly2Absorbing: {
      uint32_t x = rg.encode(witness.at("x").get<Coords>());
      uint32_t y = rg.encode(witness.at("y").get<Coords>());
      uint32_t z = m.group().encode(witness.at("z").get<Coords>());
      if (!ctx.A().is_homogeneous(x) || !ctx.A().is_homogeneous(y) ||
          !m.is_homogeneous(z))
        return false;
      uint32_t xyz = m.act(r.mul(x, y), z);
      if (xyz == 0 || !k.set.test(xyz)) return false;
      if (k.set.test(m.act(x, z)) || k.set.test(m.act(y, z))) return false;
      if (p == Pred::GradedCompletelyWeakly2Absorbing) {
        uint32_t xy = r.mul(x, y);
        for (uint32_t mm = 0; mm < m.size(); ++mm)
          if (!k.set.test(m.act(xy, mm))) return true;
        return false;
      }
      return true;
    }
    case Pred::GradedPrimeIdeal:
    case Pred::GradedWeaklyPrimeIdeal:
    case Pred::WeaklyPrimeLeftIdeal: {
      std::vector<uint32_t> ig = sub_from(witness.at("I"), false);
      std::vector<uint32_t> jg = sub_from(witness.at("J"), false);
      Substructure I, J;
      if (p == Pred::WeaklyPrimeLeftIdeal) {
        I = close_two_sided_ideal(r, ig);
        J = close_two_sided_ideal(r, jg);
      } else {
        I = close_left_ideal(r, ig);
        J = close_left_ideal(r, jg);
        if (!is_graded(ctx.A(), I) || !is_graded(ctx.A(), J)) return false;
      }
      bool contained = true, zero = true;
      for (uint32_t a : I.members) {
        for (uint32_t b : J.members) {
          uint32_t w = r.mul(a, b);
          if (w != 0) zero = false;
          if (!k.set.test(w)) {
            contained = false;
            break;
          }
        }
        if (!contained) break;
      }
      if (!contained) return false;
      if (p != Pred::GradedPrimeIdeal && zero) return false;
      return !I.set.subset_of(k.set) && !J.set.subset_of(k.set);
    }
    case Pred::GradedWeaklyPrimeElementwise: {
      uint32_t x = rg.encode(witness.at("x").get<Coords>());
      uint32_t y = rg.encode(witness.at("y").get<Coords>());
      if (!ctx.A().is_homogeneous(x) || !ctx.A().is_homogeneous(y)) return false;
      std::vector<uint32_t> prods = xay_products(r, x, y, nullptr);
      bool zero = true;
      for (uint32_t pr : prods) {
        if (pr != 0) zero = false;
        if (!k.set.test(pr)) return false;
      }
      if (zero) return false;
      return !k.set.test(x) && !k.set.test(y);
    }
    case Pred::GPrime: {
      StructCtx::Component& comp = ctx.component(*g);
      std::vector<uint32_t> ig = sub_from(witness.at("I"), false);
      std::vector<uint32_t> lg = sub_from(witness.at("L"), true);
      DenseSet ring_memb(r.size());
      for (uint32_t u : comp.view.ring_embed) ring_memb.set(u);
      DenseSet mod_memb(m.size());
      for (uint32_t u : comp.view.mod_embed) mod_memb.set(u);
      if (!subset_by_gens(ig, ring_memb) || !subset_by_gens(lg, mod_memb))
        return false;
      // Close inside the component: I as two-sided ideal of A_e, L as an
      // A_e-submodule of M_g.
      std::vector<UnaryAction> iacts, lacts;
      for (uint32_t b : comp.ring_basis_embedded) {
        iacts.push_back([&r, b](uint32_t v) { return r.mul(b, v); });
        iacts.push_back([&r, b](uint32_t v) { return r.mul(v, b); });
        lacts.push_back([&m, b](uint32_t v) { return m.act(b, v); });
      }
      Closure ci(rg);
      for (uint32_t u : ig) ci.absorb(u);
      ci.run_actions(iacts);
      Substructure I = ci.finish(SubKind::TwoSidedIdeal, ig);
      Closure cl(m.group());
      for (uint32_t u : lg) cl.absorb(u);
      cl.run_actions(lacts);
      Substructure L = cl.finish(SubKind::Submodule, lg);
      for (uint32_t a : I.members)
        for (uint32_t l : L.members)
          if (!k.set.test(m.act(a, l))) return false;
      if (L.set.subset_of(k.set)) return false;
      for (uint32_t a : I.members)
        for (uint32_t x = 0; x < m.size(); ++x)
          if (!k.set.test(m.act(a, x))) return true;  // I not inside (K : M)
      return false;
    }
    case Pred::GClassicalWeaklyPrime: {
      StructCtx::Component& comp = ctx.component(*g);
      uint32_t x = rg.encode(witness.at("x").get<Coords>());
      uint32_t y = rg.encode(witness.at("y").get<Coords>());
      std::vector<uint32_t> lg = sub_from(witness.at("L"), true);
      DenseSet ring_memb(r.size());
      for (uint32_t u : comp.view.ring_embed) ring_memb.set(u);
      if (!ring_memb.test(x) || !ring_memb.test(y)) return false;
      std::vector<UnaryAction> lacts;
      for (uint32_t b : comp.ring_basis_embedded)
        lacts.push_back([&m, b](uint32_t v) { return m.act(b, v); });
      Closure cl(m.group());
      for (uint32_t u : lg) cl.absorb(u);
      cl.run_actions(lacts);
      Substructure L = cl.finish(SubKind::Submodule, lg);
      std::vector<uint32_t> middle(comp.view.ring_embed.begin(),
                                   comp.view.ring_embed.end());
      std::vector<uint32_t> prods = xay_products(r, x, y, &middle);
      bool zero = true;
      for (uint32_t pr : prods)
        for (uint32_t l : L.members) {
          uint32_t w = m.act(pr, l);
          if (w != 0) zero = false;
          if (!k.set.test(w)) return false;
        }
      if (zero) return false;
      auto xl_in = [&](uint32_t a) {
        for (uint32_t l : L.members)
          if (!k.set.test(m.act(a, l))) return false;
        return true;
      };
      return !xl_in(x) && !xl_in(y);
    }
  }
  return false;
}

bool validate_triple_zero(StructCtx& ctx, const Substructure& k, const Json& witness) {
  const GradedModule& m = ctx.M();
  const FiniteRing& r = ctx.A().ring();
  uint32_t x = r.group().encode(witness.at("x").get<Coords>());
  uint32_t y = r.group().encode(witness.at("y").get<Coords>());
  if (!ctx.A().is_homogeneous(x) || !ctx.A().is_homogeneous(y)) return false;
  std::vector<uint32_t> lg = parse_elems(m.group(), witness.at("L").at("generators"));
  Substructure L = close_submodule(m, lg);
  if (!is_graded(m, L)) return false;
  std::vector<uint32_t> prods = xay_products(r, x, y, nullptr);
  for (uint32_t pr : prods)
    for (uint32_t l : L.members)
      if (m.act(pr, l) != 0) return false;
  auto xl_in = [&](uint32_t a) {
    for (uint32_t l : L.members)
      if (!k.set.test(m.act(a, l))) return false;
    return true;
  };
  return !xl_in(x) && !xl_in(y);
}

}  // namespace gralab

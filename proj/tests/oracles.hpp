#pragma once

// Test-only reference implementations, kept deliberately naive and
// independent of the production paths they check.

#include <algorithm>
#include <set>
#include <vector>

#include "gralab/substructure.hpp"

namespace gralab::oracle {

// Literal double loop over (a in A, l in L) classifying 0 != x*A*y*L <= K.
inline SandwichOutcome naive_sandwich(const GradedModule& m, uint32_t x, uint32_t y,
                                      const Substructure& l, const DenseSet& k) {
  const FiniteRing& r = m.ring().ring();
  bool contained = true, zero = true;
  for (uint32_t a = 0; a < r.size(); ++a) {
    uint32_t p = r.mul(r.mul(x, a), y);
    for (uint32_t ll : l.members) {
      uint32_t v = m.act(p, ll);
      if (v != 0) zero = false;
      if (!k.test(v)) contained = false;
      if (!zero && !contained) return SandwichOutcome::NotContained;
    }
  }
  if (zero) return SandwichOutcome::ProductZero;
  return contained ? SandwichOutcome::Holds : SandwichOutcome::NotContained;
}

// Colon computed from every element of X rather than its generators.
inline DenseSet naive_colon(const GradedModule& m, const DenseSet& k,
                            const std::vector<uint32_t>& x_members) {
  DenseSet out(m.ring().ring().size());
  for (uint32_t a = 0; a < m.ring().ring().size(); ++a) {
    bool ok = true;
    for (uint32_t x : x_members)
      if (!k.test(m.act(a, x))) {
        ok = false;
        break;
      }
    if (ok) out.set(a);
  }
  return out;
}

// All additive subgroups, filtered for action closure and gradedness.
// Independent route for enumerate_graded_submodules on small structures.
inline std::vector<DenseSet> filter_all_subgroups(const GradedModule& m) {
  Lattice subs = enumerate_subgroups(m.group());
  std::vector<DenseSet> out;
  for (const Substructure& s : subs.items) {
    bool closed = true;
    for (uint32_t i = 0; i < m.ring().ring().rank() && closed; ++i) {
      uint32_t b = m.ring().ring().group().basis_element(i);
      for (uint32_t x : s.members)
        if (!s.set.test(m.act(b, x))) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    if (!is_graded(m, s)) continue;
    out.push_back(s.set);
  }
  std::sort(out.begin(), out.end(), [](const DenseSet& a, const DenseSet& b) {
    return DenseSet::compare(a, b) < 0;
  });
  return out;
}

}  // namespace gralab::oracle

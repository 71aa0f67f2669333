#pragma once

#include "gralab/substructure.hpp"

namespace gralab {

// Graded module homomorphism over a common graded ring, determined by the
// images of the source basis generators. Validation is exhaustive on
// basis x ring-basis pairs: additive well-definedness, A-linearity and
// degree preservation f(M_g) <= S_g.
class GradedHom {
 public:
  GradedHom(std::shared_ptr<const GradedModule> source,
            std::shared_ptr<const GradedModule> target,
            std::vector<uint32_t> basis_images);

  const GradedModule& source() const { return *src_; }
  const GradedModule& target() const { return *dst_; }
  std::shared_ptr<const GradedModule> source_ptr() const { return src_; }
  std::shared_ptr<const GradedModule> target_ptr() const { return dst_; }

  uint32_t apply(uint32_t x) const;
  uint32_t basis_image(uint32_t j) const { return images_[j]; }

  bool injective() const;
  bool surjective() const;

 private:
  void validate() const;

  std::shared_ptr<const GradedModule> src_;
  std::shared_ptr<const GradedModule> dst_;
  std::vector<uint32_t> images_;
};

Substructure kernel(const GradedHom& f);
// Image/preimage of graded submodules; both outputs are cross-checked against
// is_graded and closure under the action.
Substructure hom_image(const GradedHom& f, const Substructure& k);
Substructure hom_preimage(const GradedHom& f, const Substructure& k);

// Presentation of the subquotient K/T (T <= K <= M, both graded) as a graded
// module in its own right, with translation tables in both directions.
//   quotient:  K = M, T arbitrary   ->  M/T plus the projection
//   submodule: T = 0, K arbitrary   ->  K as a module plus the inclusion
struct SubquotientPresentation {
  std::shared_ptr<GradedModule> module;
  std::vector<uint32_t> basis_reps;   // parent element per new basis generator
  std::vector<int64_t> to_new;        // parent element -> new index (-1 outside K)
  std::vector<uint32_t> rep_of;       // new index -> lexicographically least parent rep
};

SubquotientPresentation present_subquotient(const GradedModule& m,
                                            const Substructure& k,
                                            const Substructure& t);

struct QuotientModule {
  SubquotientPresentation pres;
  GradedHom projection;
};
QuotientModule quotient_module(const std::shared_ptr<const GradedModule>& m,
                               const Substructure& t);

struct SubmoduleModule {
  SubquotientPresentation pres;
  GradedHom inclusion;
};
SubmoduleModule submodule_as_module(const std::shared_ptr<const GradedModule>& m,
                                    const Substructure& k);

}  // namespace gralab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gralab/hom.hpp"

using namespace gralab;

namespace {

std::shared_ptr<GradedModule> z8_regular() {
  auto ring = std::make_shared<GradedRing>(GradedRing::trivial(FiniteRing::zmod(8)));
  return GradedModule::regular(ring);
}

std::shared_ptr<GradedModule> m2z8_graded() {
  auto ring = std::make_shared<GradedRing>(GradedRing::good_matrix_grading(
      FiniteRing::matrix_ring(FiniteRing::zmod(8), 2), 2, FiniteGroup::cyclic(4),
      {0, 2}));
  return GradedModule::regular(ring);
}

}  // namespace

TEST_CASE("quotient Z8 / 4Z8") {
  auto m = z8_regular();
  Lattice lat = enumerate_graded_submodules(*m);
  QuotientModule q = quotient_module(m, lat.items[1]);  // T = 4Z8
  CHECK(q.pres.module->size() == 4);
  CHECK(q.projection.surjective());
  CHECK_FALSE(q.projection.injective());
  Substructure ker = kernel(q.projection);
  CHECK(ker.set == lat.items[1].set);
  // Image of 2Z8 is the unique proper nonzero submodule of the quotient.
  Substructure img = hom_image(q.projection, lat.items[2]);
  Lattice qlat = enumerate_graded_submodules(*q.pres.module);
  REQUIRE(qlat.items.size() == 3);
  CHECK(img.set == qlat.items[1].set);
  // Preimage of zero is the kernel.
  Substructure z = close_submodule(*q.pres.module, {});
  CHECK(hom_preimage(q.projection, z).set == lat.items[1].set);
}

TEST_CASE("quotient by zero is isomorphic, quotient by M is zero") {
  auto m = z8_regular();
  Lattice lat = enumerate_graded_submodules(*m);
  QuotientModule q0 = quotient_module(m, lat.items[0]);
  CHECK(q0.pres.module->size() == 8);
  CHECK(q0.projection.injective());
  CHECK(q0.projection.surjective());
  QuotientModule qm = quotient_module(m, lat.items[3]);
  CHECK(qm.pres.module->size() == 1);
}

TEST_CASE("quotient of the graded matrix module") {
  auto m = m2z8_graded();
  Lattice lat = enumerate_graded_submodules(*m);
  uint32_t twoI = m->group().encode(Coords{2, 0, 0, 2});
  uint32_t gens[] = {twoI};
  Substructure t = close_submodule(*m, gens);
  QuotientModule q = quotient_module(m, t);
  CHECK(q.pres.module->size() == m->size() / t.size());
  CHECK(q.projection.surjective());
  // Induced grading survives validation and cosets land per degree.
  Substructure ker = kernel(q.projection);
  CHECK(ker.set == t.set);
  // Lattice of quotient corresponds to graded submodules containing T.
  Lattice qlat = enumerate_graded_submodules(*q.pres.module);
  size_t over_t = 0;
  for (const auto& k : lat.items)
    if (t.set.subset_of(k.set)) ++over_t;
  CHECK(qlat.items.size() == over_t);
}

TEST_CASE("identity hom and preimage") {
  auto m = z8_regular();
  std::vector<uint32_t> images;
  for (uint32_t j = 0; j < m->rank(); ++j)
    images.push_back(m->group().basis_element(j));
  GradedHom id(m, m, images);
  CHECK(id.injective());
  CHECK(id.surjective());
  Lattice lat = enumerate_graded_submodules(*m);
  for (const auto& k : lat.items) {
    CHECK(hom_preimage(id, k).set == k.set);
    CHECK(hom_image(id, k).set == k.set);
  }
}

TEST_CASE("submodule as module and inclusion") {
  auto m = z8_regular();
  Lattice lat = enumerate_graded_submodules(*m);
  SubmoduleModule sub = submodule_as_module(m, lat.items[2]);  // 2Z8
  CHECK(sub.pres.module->size() == 4);
  CHECK(sub.inclusion.injective());
  // Image of the submodule {0,4} of 2Z8 under inclusion is {0,4}.
  Lattice sublat = enumerate_graded_submodules(*sub.pres.module);
  REQUIRE(sublat.items.size() == 3);
  Substructure img = hom_image(sub.inclusion, sublat.items[1]);
  CHECK(img.members == std::vector<uint32_t>{0, 4});
}

TEST_CASE("hom validation rejects bad maps") {
  auto m = z8_regular();
  // x -> 3x is linear, fine; an additive-order violation must throw.
  CHECK_NOTHROW(GradedHom(m, m, {3}));
  auto m2 = m2z8_graded();
  // Map e11 somewhere of the wrong degree.
  std::vector<uint32_t> images(4, 0);
  images[0] = m2->group().encode(Coords{0, 1, 0, 0});
  CHECK_THROWS_AS(GradedHom(m2, m2, images), ValidationError);
}

TEST_CASE("direct product of modules") {
  auto m = z8_regular();
  auto p = GradedModule::direct_product(m, m);
  CHECK(p->size() == 64);
  Lattice lat = enumerate_graded_submodules(*m);
  // K x S built directly is a graded submodule of M x S.
  const Substructure& k = lat.items[2];
  DenseSet prod(p->size());
  for (uint32_t a : k.members)
    for (uint32_t b = 0; b < m->size(); ++b) prod.set(a * m->size() + b);
  Substructure ks;
  ks.kind = SubKind::Submodule;
  ks.set = prod;
  ks.members = prod.to_list();
  ks.addgens = extract_addgens(p->group(), ks.members);
  CHECK(is_graded(*p, ks));
  Substructure closed = close_submodule(*p, ks.addgens);
  CHECK(closed.set == ks.set);
}

TEST_CASE("product ring mismatch rejected") {
  auto m = z8_regular();
  auto other = z8_regular();  // distinct ring object
  CHECK_THROWS_AS(GradedModule::direct_product(m, other), ValidationError);
}

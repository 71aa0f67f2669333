#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"

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

std::shared_ptr<GradedModule> m2z2_graded(uint32_t group_order, uint32_t s1) {
  auto ring = std::make_shared<GradedRing>(GradedRing::good_matrix_grading(
      FiniteRing::matrix_ring(FiniteRing::zmod(2), 2), 2,
      FiniteGroup::cyclic(group_order), {0, s1}));
  return GradedModule::regular(ring);
}

}  // namespace

TEST_CASE("closure of {2} in Z8") {
  auto m = z8_regular();
  uint32_t gens[] = {2};
  Substructure s = close_submodule(*m, gens);
  CHECK(s.members == std::vector<uint32_t>{0, 2, 4, 6});
}

TEST_CASE("closure of empty set is zero") {
  auto m = m2z8_graded();
  Substructure s = close_submodule(*m, {});
  CHECK(s.members == std::vector<uint32_t>{0});
}

TEST_CASE("closure of {2I} in M2(Z8) is all even matrices") {
  auto m = m2z8_graded();
  uint32_t twoI = m->group().encode(Coords{2, 0, 0, 2});
  uint32_t gens[] = {twoI};
  Substructure s = close_submodule(*m, gens);
  CHECK(s.size() == 256);
  for (uint32_t x : s.members) {
    Coords c = m->group().decode(x);
    for (uint32_t v : c) CHECK(v % 2 == 0);
  }
}

TEST_CASE("closure rejects out-of-range generators") {
  auto m = z8_regular();
  uint32_t gens[] = {12345};
  CHECK_THROWS_AS(close_submodule(*m, gens), ValidationError);
}

TEST_CASE("closure is idempotent and monotone") {
  auto m = m2z2_graded(4, 2);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<uint32_t> gens{uint32_t(rng() % m->size())};
    if (t % 2) gens.push_back(uint32_t(rng() % m->size()));
    Substructure s = close_submodule(*m, gens);
    Substructure s2 = close_submodule(*m, s.members);
    CHECK(s2.set == s.set);
    std::vector<uint32_t> more = gens;
    more.push_back(uint32_t(rng() % m->size()));
    Substructure bigger = close_submodule(*m, more);
    CHECK(s.set.subset_of(bigger.set));
  }
}

TEST_CASE("graded submodules of trivially graded Z8") {
  auto m = z8_regular();
  Lattice lat = enumerate_graded_submodules(*m);
  REQUIRE(lat.items.size() == 4);
  CHECK(lat.items[0].size() == 1);
  CHECK(lat.items[1].members == std::vector<uint32_t>{0, 4});
  CHECK(lat.items[2].members == std::vector<uint32_t>{0, 2, 4, 6});
  CHECK(lat.items[3].size() == 8);
}

TEST_CASE("zero module has exactly one submodule") {
  auto ring = std::make_shared<GradedRing>(GradedRing::trivial(FiniteRing::zmod(8)));
  GradedModule zero(ring, Coords{}, {}, {});
  Lattice lat = enumerate_graded_submodules(zero);
  CHECK(lat.items.size() == 1);
}

TEST_CASE("known subgroup lattice sizes") {
  CHECK(enumerate_subgroups(AddGroup({8})).items.size() == 4);
  CHECK(enumerate_subgroups(AddGroup({2, 2})).items.size() == 5);
  CHECK(enumerate_subgroups(AddGroup({4, 4})).items.size() == 15);
  CHECK(enumerate_subgroups(AddGroup({2, 2, 2, 2})).items.size() == 67);
  CHECK(enumerate_subgroups(AddGroup({3, 3})).items.size() == 6);
}

TEST_CASE("lattice cap raises instead of truncating") {
  AddGroup g({2, 2, 2, 2});
  CHECK_THROWS_AS(enumerate_subgroups(g, 10), CapExceeded);
}

TEST_CASE("graded enumeration equals subgroup-filter oracle") {
  auto check_against_oracle = [](const GradedModule& m) {
    Lattice lat = enumerate_graded_submodules(m);
    std::vector<DenseSet> oracle = oracle::filter_all_subgroups(m);
    REQUIRE(lat.items.size() == oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i) CHECK(lat.items[i].set == oracle[i]);
    // Lattice invariants: gradedness, distinctness, closure under sum and meet.
    for (size_t i = 0; i < lat.items.size(); ++i) {
      CHECK(is_graded(m, lat.items[i]));
      for (size_t j = i + 1; j < lat.items.size(); ++j) {
        CHECK_FALSE(lat.items[i].set == lat.items[j].set);
        Substructure sum = join(m.group(), lat.items[i], lat.items[j]);
        Substructure meet = intersect(m.group(), lat.items[i], lat.items[j]);
        CHECK(lat.index_of(sum.set) >= 0);
        CHECK(lat.index_of(meet.set) >= 0);
      }
    }
  };
  check_against_oracle(*z8_regular());
  check_against_oracle(*m2z2_graded(4, 2));
  check_against_oracle(*m2z2_graded(2, 1));
  {
    auto ring = std::make_shared<GradedRing>(GradedRing::good_matrix_grading(
        FiniteRing::matrix_ring(FiniteRing::zmod(4), 2), 2, FiniteGroup::cyclic(4),
        {0, 2}));
    check_against_oracle(*GradedModule::regular(ring));
  }
}

TEST_CASE("A_e-submodules of the degree-2 component of M2(Z2)") {
  auto m = m2z2_graded(4, 2);
  ComponentView v = make_component_view(m->ring(), *m, 2);
  Lattice lat = enumerate_graded_submodules(*v.module);
  // Expect {0, e12} and {0, e21} among them.
  uint32_t e12 = 0, e21 = 0;
  for (uint32_t x = 0; x < v.module->size(); ++x) {
    Coords c = m->group().decode(v.mod_embed[x]);
    if (c == Coords{0, 1, 0, 0}) e12 = x;
    if (c == Coords{0, 0, 1, 0}) e21 = x;
  }
  bool has12 = false, has21 = false;
  for (const auto& item : lat.items) {
    if (item.members.size() == 2 && item.members[1] == e12) has12 = true;
    if (item.members.size() == 2 && item.members[1] == e21) has21 = true;
  }
  CHECK(has12);
  CHECK(has21);
}

TEST_CASE("is_graded distinguishes additive subgroups") {
  auto m = m2z2_graded(4, 2);
  // 2A = even matrices is graded; the additive span of e11+e12 is not.
  uint32_t mixed = m->group().encode(Coords{1, 1, 0, 0});
  uint32_t gens[] = {mixed};
  Substructure add_only = close_additive(m->group(), gens);
  CHECK(add_only.size() == 2);
  CHECK_FALSE(is_graded(*m, add_only));
  Substructure zero = close_submodule(*m, {});
  CHECK(is_graded(*m, zero));
}

TEST_CASE("2A is graded in M2(Z8)") {
  auto m = m2z8_graded();
  uint32_t twoI = m->group().encode(Coords{2, 0, 0, 2});
  uint32_t gens[] = {twoI};
  Substructure s = close_submodule(*m, gens);
  CHECK(is_graded(*m, s));
}

TEST_CASE("colon and annihilator spot values in Z8") {
  auto m = z8_regular();
  Lattice lat = enumerate_graded_submodules(*m);
  const Substructure& four = lat.items[1];
  const Substructure& two = lat.items[2];
  const Substructure& whole = lat.items[3];
  // (4Z8 : 2Z8) = 2Z8
  DenseSet c = colon_in_ring(*m, four.set, two.addgens);
  CHECK(c == two.set);
  // (M : M) = A
  DenseSet cm = colon_in_ring(*m, whole.set, whole.addgens);
  CHECK(cm.count() == 8);
  // Ann(2Z8) = 4Z8; Ann(Z8) = 0 (faithful); Ann(0) = everything
  CHECK(annihilator_in_ring(*m, two.addgens) == four.set);
  CHECK(annihilator_in_ring(*m, whole.addgens).count() == 1);
  CHECK(annihilator_in_ring(*m, lat.items[0].addgens).count() == 8);
}

TEST_CASE("colon from generators equals colon from all elements") {
  auto m = m2z2_graded(4, 2);
  Lattice lat = enumerate_graded_submodules(*m);
  for (const auto& k : lat.items)
    for (const auto& l : lat.items) {
      DenseSet fast = colon_in_ring(*m, k.set, l.addgens);
      DenseSet slow = oracle::naive_colon(*m, k.set, l.members);
      CHECK(fast == slow);
    }
}

TEST_CASE("sandwich test agrees with the naive double loop") {
  auto small = m2z2_graded(4, 2);
  auto z8 = z8_regular();
  std::vector<std::shared_ptr<GradedModule>> mods{small, z8};
  std::mt19937_64 rng(2024);
  std::vector<uint32_t> basis_gens;
  for (const auto& m : mods) {
    Lattice lat = enumerate_graded_submodules(*m);
    const auto& h = m->ring().homogeneous_elements();
    std::vector<uint32_t> middle;
    for (uint32_t i = 0; i < m->ring().ring().rank(); ++i)
      middle.push_back(m->ring().ring().group().basis_element(i));
    for (int t = 0; t < 300; ++t) {
      uint32_t x = h[rng() % h.size()];
      uint32_t y = h[rng() % h.size()];
      const Substructure& l = lat.items[rng() % lat.items.size()];
      const Substructure& k = lat.items[rng() % lat.items.size()];
      CHECK(sandwich_test(*m, x, y, middle, l, k.set) ==
            oracle::naive_sandwich(*m, x, y, l, k.set));
    }
  }
}

TEST_CASE("sandwich spot cases") {
  auto m = m2z8_graded();
  Lattice lat = enumerate_graded_submodules(*m);
  uint32_t twoI = m->group().encode(Coords{2, 0, 0, 2});
  uint32_t gens[] = {twoI};
  Substructure l = close_submodule(*m, gens);
  std::vector<uint32_t> middle;
  for (uint32_t i = 0; i < 4; ++i)
    middle.push_back(m->ring().ring().group().basis_element(i));
  DenseSet zero(m->size());
  zero.set(0);
  CHECK(sandwich_test(*m, twoI, twoI, middle, l, zero) == SandwichOutcome::ProductZero);

  auto z2r = std::make_shared<GradedRing>(GradedRing::trivial(FiniteRing::zmod(2)));
  auto z2 = GradedModule::regular(z2r);
  Lattice z2lat = enumerate_graded_submodules(*z2);
  DenseSet z2zero(2);
  z2zero.set(0);
  std::vector<uint32_t> mid{1};
  CHECK(sandwich_test(*z2, 1, 1, mid, z2lat.items.back(), z2zero) ==
        SandwichOutcome::NotContained);

  auto z8 = z8_regular();
  Lattice z8lat = enumerate_graded_submodules(*z8);
  std::vector<uint32_t> mid8{1};
  CHECK(sandwich_test(*z8, 2, 2, mid8, z8lat.items[3], z8lat.items[1].set) ==
        SandwichOutcome::Holds);
}

TEST_CASE("sum, intersect, maximality in the divisor lattice of Z8") {
  auto m = z8_regular();
  Lattice lat = enumerate_graded_submodules(*m);
  Substructure s = join(m->group(), lat.items[2], lat.items[1]);
  CHECK(s.set == lat.items[2].set);
  Substructure i = intersect(m->group(), lat.items[2], lat.items[3]);
  CHECK(i.set == lat.items[2].set);
  CHECK(is_maximal_graded(lat, 2));
  CHECK_FALSE(is_maximal_graded(lat, 1));
  CHECK_FALSE(is_maximal_graded(lat, 3));
}

TEST_CASE("graded left ideals of M2(Z8) lattice sanity") {
  auto m = m2z8_graded();
  Lattice lat = enumerate_graded_submodules(*m);
  CHECK(lat.items.size() > 4);
  for (const auto& k : lat.items) CHECK(is_graded(*m, k));
  // Regular module: graded submodules coincide with graded left ideals.
  Lattice li = enumerate_graded_left_ideals(m->ring());
  REQUIRE(li.items.size() == lat.items.size());
  for (size_t i = 0; i < li.items.size(); ++i)
    CHECK(li.items[i].set == lat.items[i].set);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gralab/graded.hpp"
#include "gralab/smith.hpp"

using namespace gralab;

TEST_CASE("zmod basics") {
  FiniteRing z8 = FiniteRing::zmod(8);
  CHECK(z8.size() == 8);
  CHECK(z8.one() == 1);
  CHECK(z8.mul(2, 2) == 4);
  CHECK(z8.mul(z8.mul(2, 2), 2) == 0);
  CHECK(z8.add(5, 6) == 3);
  CHECK(z8.neg(3) == 5);
}

TEST_CASE("zmod degenerate cases") {
  CHECK_THROWS_AS(FiniteRing::zmod(0), ValidationError);
  FiniteRing z1 = FiniteRing::zmod(1);
  CHECK(z1.size() == 1);
  CHECK(z1.one() == z1.zero());
}

TEST_CASE("matrix ring M2(Z8)") {
  FiniteRing z8 = FiniteRing::zmod(8);
  FiniteRing m = FiniteRing::matrix_ring(z8, 2);
  CHECK(m.size() == 4096);
  CHECK(m.rank() == 4);
  // [[1,0],[0,2]] * [[0,1],[1,0]] = [[0,1],[2,0]]
  uint32_t a = m.group().encode(Coords{1, 0, 0, 2});
  uint32_t b = m.group().encode(Coords{0, 1, 1, 0});
  CHECK(m.mul(a, b) == m.group().encode(Coords{0, 1, 2, 0}));
  CHECK_FALSE(m.is_commutative());
  CHECK_THROWS_AS(FiniteRing::matrix_ring(m, 2, 1u << 30), ValidationError);
}

TEST_CASE("matrix ring trivial size") {
  FiniteRing m = FiniteRing::matrix_ring(FiniteRing::zmod(2), 1);
  CHECK(m.size() == 2);
  CHECK(m.mul(1, 1) == 1);
}

TEST_CASE("product ring") {
  FiniteRing p = FiniteRing::product({FiniteRing::zmod(2), FiniteRing::zmod(4)});
  CHECK(p.size() == 8);
  uint32_t x = p.group().encode(Coords{1, 2});
  CHECK(p.add(x, x) == 0);
  FiniteRing q = FiniteRing::product({FiniteRing::zmod(2), FiniteRing::zmod(2)});
  uint32_t e1 = q.group().encode(Coords{1, 0});
  uint32_t e2 = q.group().encode(Coords{0, 1});
  CHECK(q.mul(e1, e2) == 0);
  CHECK_THROWS_AS(FiniteRing::product({}), ValidationError);
}

TEST_CASE("validate rejects corrupted structure constants") {
  FiniteRing z2 = FiniteRing::zmod(2);
  FiniteRing m = FiniteRing::matrix_ring(z2, 2);
  // Rebuild with e11*e12 := e21.
  uint32_t k = m.rank();
  std::vector<Coords> sc(k * k);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j)
      sc[i * k + j] = m.group().decode(m.basis_product(i, j));
  sc[0 * k + 1] = Coords{0, 0, 1, 0};
  CHECK_THROWS_AS(FiniteRing(m.group().orders(), sc,
                             m.group().decode(m.one())).validate(),
                  ValidationError);
}

TEST_CASE("bilinearity on random triples") {
  FiniteRing m = FiniteRing::matrix_ring(FiniteRing::zmod(4), 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<uint32_t> d(0, m.size() - 1);
  for (int t = 0; t < 1000; ++t) {
    uint32_t a = d(rng), b = d(rng), c = d(rng);
    CHECK(m.mul(m.add(a, b), c) == m.add(m.mul(a, c), m.mul(b, c)));
    CHECK(m.mul(c, m.add(a, b)) == m.add(m.mul(c, a), m.mul(c, b)));
  }
}

TEST_CASE("good matrix grading of M2(Z8)") {
  auto ring = std::make_shared<GradedRing>(GradedRing::good_matrix_grading(
      FiniteRing::matrix_ring(FiniteRing::zmod(8), 2), 2, FiniteGroup::cyclic(4),
      {0, 2}));
  CHECK(ring->component(0).size() == 64);
  CHECK(ring->component(2).size() == 64);
  CHECK(ring->component(1).size() == 1);
  CHECK(ring->component(3).size() == 1);
  CHECK(ring->homogeneous_elements().size() == 127);

  // part decomposition of [[1,2],[3,4]]
  uint32_t x = ring->ring().group().encode(Coords{1, 2, 3, 4});
  CHECK(ring->part(x, 0) == ring->ring().group().encode(Coords{1, 0, 0, 4}));
  CHECK(ring->part(x, 2) == ring->ring().group().encode(Coords{0, 2, 3, 0}));
  uint32_t sum = 0;
  for (uint32_t g = 0; g < 4; ++g) sum = ring->ring().add(sum, ring->part(x, g));
  CHECK(sum == x);
  CHECK_FALSE(ring->is_homogeneous(x));
  CHECK(ring->degree_of(ring->part(x, 2)) == 2);
}

TEST_CASE("trivial grading and sigma=(0,0)") {
  auto g0 = GradedRing::good_matrix_grading(
      FiniteRing::matrix_ring(FiniteRing::zmod(2), 2), 2, FiniteGroup::cyclic(4),
      {0, 0});
  CHECK(g0.component(0).size() == 16);
  auto t = GradedRing::trivial(FiniteRing::zmod(8));
  CHECK(t.homogeneous_elements().size() == 8);
}

TEST_CASE("grading validation rejects incompatible degree maps") {
  FiniteRing p = FiniteRing::product({FiniteRing::zmod(2), FiniteRing::zmod(2)});
  // (0,1) has degree 1 but squares to itself, violating A_1*A_1 <= A_0.
  CHECK_THROWS_AS(GradedRing(p, FiniteGroup::cyclic(2), {0, 1}), ValidationError);
}

TEST_CASE("random homogeneous products stay homogeneous") {
  auto ring = GradedRing::good_matrix_grading(
      FiniteRing::matrix_ring(FiniteRing::zmod(8), 2), 2, FiniteGroup::cyclic(4),
      {0, 2});
  std::mt19937_64 rng(11);
  const FiniteGroup& grp = ring.grading_group();
  for (int t = 0; t < 1000; ++t) {
    uint32_t g = rng() % grp.size(), h = rng() % grp.size();
    const auto& cg = ring.component(g);
    const auto& ch = ring.component(h);
    uint32_t a = cg[rng() % cg.size()], b = ch[rng() % ch.size()];
    uint32_t p = ring.ring().mul(a, b);
    uint32_t gh = grp.mul(g, h);
    CHECK(ring.part(p, gh) == p);
  }
  // A_e is multiplicatively closed and contains 1.
  CHECK(ring.part(ring.ring().one(), 0) == ring.ring().one());
}

TEST_CASE("regular module matches ring action") {
  auto ring = std::make_shared<GradedRing>(GradedRing::trivial(FiniteRing::zmod(8)));
  auto m = GradedModule::regular(ring);
  CHECK(m->size() == 8);
  CHECK(m->act(3, 5) == ring->ring().mul(3, 5));
}

TEST_CASE("component view of M2(Z2) with Z4 grading") {
  auto ring = std::make_shared<GradedRing>(GradedRing::good_matrix_grading(
      FiniteRing::matrix_ring(FiniteRing::zmod(2), 2), 2, FiniteGroup::cyclic(4),
      {0, 2}));
  auto m = GradedModule::regular(ring);
  ComponentView v = make_component_view(*ring, *m, 2);
  CHECK(v.ring->ring().size() == 4);   // diagonal matrices over Z2
  CHECK(v.module->size() == 4);        // antidiagonal component
  // Embeddings land in the right components.
  for (uint32_t x = 0; x < v.module->size(); ++x)
    CHECK(m->part(v.mod_embed[x], 2) == v.mod_embed[x]);
}

TEST_CASE("cyclic decomposition recovers known groups") {
  // 2Z8 inside Z8 is cyclic of order 4.
  auto d = cyclic_decomposition({8}, {{2}}, {});
  REQUIRE(d.orders.size() == 1);
  CHECK(d.orders[0] == 4);
  CHECK(d.gens[0][0] % 2 == 0);

  // Z8 / 4Z8 has order 4.
  auto q = cyclic_decomposition({8}, {{1}}, {{4}});
  REQUIRE(q.orders.size() == 1);
  CHECK(q.orders[0] == 4);

  // Klein subgroup of Z4 x Z4 generated by (2,0),(0,2).
  auto kl = cyclic_decomposition({4, 4}, {{2, 0}, {0, 2}}, {});
  REQUIRE(kl.orders.size() == 2);
  CHECK(kl.orders[0] == 2);
  CHECK(kl.orders[1] == 2);

  // Diagonal of Z2 x Z2.
  auto dg = cyclic_decomposition({2, 2}, {{1, 1}}, {});
  REQUIRE(dg.orders.size() == 1);
  CHECK(dg.orders[0] == 2);
}

TEST_CASE("group tables") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.is_abelian());
  FiniteGroup k4 = FiniteGroup::product_of_cyclic({2, 2});
  CHECK(k4.size() == 4);
  CHECK(k4.mul(1, 2) == 3);
  // S3 via explicit table must validate; broken table must not.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
}

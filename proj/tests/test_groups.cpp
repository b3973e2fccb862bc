#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "comgraph/constructions.hpp"
#include "comgraph/errors.hpp"
#include "comgraph/finite_group.hpp"
#include "oracles.hpp"

using namespace comgraph;

namespace {

// Affine product with row vectors, written out independently of AffineRep.
struct Aff {
  int x0, x1, a, b, c, d;  // ((x0,x1), [[a,b],[c,d]])
};

int md(long v, int p) { return static_cast<int>(((v % p) + p) % p); }

Aff aff_inverse_matrix(const Aff& m, int p) {
  const int det = md(long(m.a) * m.d - long(m.b) * m.c, p);
  int inv = 1;
  while (md(long(inv) * det, p) != 1) ++inv;
  return {0, 0, md(long(m.d) * inv, p), md(-long(m.b) * inv, p), md(-long(m.c) * inv, p), md(long(m.a) * inv, p)};
}

Aff aff_mul(const Aff& u, const Aff& v, int p) {
  const Aff ui = aff_inverse_matrix(u, p);
  // (x, X)(y, Y) = (x + y X^-1, X Y)
  return {md(u.x0 + long(v.x0) * ui.a + long(v.x1) * ui.c, p), md(u.x1 + long(v.x0) * ui.b + long(v.x1) * ui.d, p),
          md(long(u.a) * v.a + long(u.b) * v.c, p),           md(long(u.a) * v.b + long(u.b) * v.d, p),
          md(long(u.c) * v.a + long(u.d) * v.c, p),           md(long(u.c) * v.b + long(u.d) * v.d, p)};
}

Affine to_affine(const Aff& m, int p) {
  return Affine{static_cast<std::uint32_t>(p),
                {static_cast<std::uint8_t>(m.x0), static_cast<std::uint8_t>(m.x1)},
                {static_cast<std::uint8_t>(m.a), static_cast<std::uint8_t>(m.b), static_cast<std::uint8_t>(m.c),
                 static_cast<std::uint8_t>(m.d)}};
}

std::vector<GroupPtr> small_groups() {
  return {symmetric(3), symmetric(4), alternating(4), quaternion8(), sl23(), dihedral(10), cyclic(12),
          ult(3, 3),    ult(4, 2),    extraspecial(2, 2), wreath(symmetric(3), 2)};
}

}  // namespace

TEST_CASE("group axioms hold on random triples") {
  std::mt19937 rng(7);
  for (const auto& g : small_groups()) {
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g->order() - 1));
    for (int t = 0; t < 200; ++t) {
      const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
      CHECK(g->multiply(a, FiniteGroup::identity()) == a);
      CHECK(g->multiply(FiniteGroup::identity(), a) == a);
      CHECK(g->multiply(a, g->invert(a)) == FiniteGroup::identity());
    }
  }
}

TEST_CASE("Lagrange: element orders and centralizer sizes divide |G|") {
  for (const auto& g : small_groups()) {
    for (ElementId a = 0; a < g->order(); ++a) {
      CHECK(g->order() % g->element_order(a) == 0);
      CHECK(g->element_order(a) == oracle::order_of(*g, a));
      CHECK(g->order() % g->centralizer(a).size() == 0);
    }
  }
}

TEST_CASE("centralizer and center match the brute-force oracle") {
  for (const auto& g : small_groups()) {
    CHECK(g->center() == oracle::center(*g));
    for (ElementId a = 0; a < g->order(); ++a) CHECK(g->centralizer(a) == oracle::centralizer(*g, a));
  }
  const auto w = construction_w(7);
  CHECK(w.group->center() == oracle::center(*w.group));
  std::mt19937 rng(11);
  std::uniform_int_distribution<ElementId> pick(0, 1175);
  for (int t = 0; t < 25; ++t) {
    const ElementId a = pick(rng);
    CHECK(w.group->centralizer(a) == oracle::centralizer(*w.group, a));
  }
}

TEST_CASE("Cayley table lookups agree with the representation") {
  const auto g = sl23();
  std::vector<ElementId> before;
  for (ElementId a = 0; a < g->order(); ++a) {
    for (ElementId b = 0; b < g->order(); ++b) before.push_back(g->multiply(a, b));
  }
  g->build_cayley_table();
  REQUIRE(g->has_cayley_table());
  std::size_t k = 0;
  for (ElementId a = 0; a < g->order(); ++a) {
    for (ElementId b = 0; b < g->order(); ++b) CHECK(g->multiply(a, b) == before[k++]);
  }
}

TEST_CASE("affine products follow the row-vector convention") {
  const int p = 7;
  const auto w = construction_w(p);
  const FiniteGroup& g = *w.group;
  const ElementId t = w.element(0, 1, w.identity_matrix());
  CHECK(g.multiply(t, t) == w.element(0, 2, w.identity_matrix()));
  CHECK(g.element_order(t) == 7);

  std::mt19937 rng(3);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  for (int trial = 0; trial < 100; ++trial) {
    const ElementId x = pick(rng);
    CHECK(g.multiply(x, g.invert(x)) == FiniteGroup::identity());
    const ElementId y = pick(rng);
    const auto ex = std::get<Affine>(g.element(x));
    const auto ey = std::get<Affine>(g.element(y));
    const Aff u{ex.vec[0], ex.vec[1], ex.mat[0], ex.mat[1], ex.mat[2], ex.mat[3]};
    const Aff v{ey.vec[0], ey.vec[1], ey.mat[0], ey.mat[1], ey.mat[2], ey.mat[3]};
    CHECK(g.id_of(to_affine(aff_mul(u, v, p), p)) == g.multiply(x, y));
  }

  // ((1,1),-I) squares to the identity under the independent product.
  const Aff a{1, 1, p - 1, 0, 0, p - 1};
  const Aff sq = aff_mul(a, a, p);
  CHECK((sq.x0 == 0 && sq.x1 == 0 && sq.a == 1 && sq.b == 0 && sq.c == 0 && sq.d == 1));
  const ElementId ga = g.id_of(to_affine(a, p));
  CHECK(g.invert(ga) == ga);
}

TEST_CASE("inverse of identity and of a 3-cycle") {
  const auto s3 = symmetric(3);
  CHECK(s3->invert(FiniteGroup::identity()) == FiniteGroup::identity());
  const ElementId c = s3->id_of(Perm::from_cycles(3, {{0, 1, 2}}));
  CHECK(s3->invert(c) == s3->id_of(Perm::from_cycles(3, {{0, 2, 1}})));
  CHECK(s3->format(FiniteGroup::identity()) == "()");
}

TEST_CASE("permutation products compose left to right") {
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  // 0 -a-> 1 -b-> 2
  CHECK(a.then(b).images[0] == 2);
  const auto s3 = symmetric(3);
  CHECK(s3->id_of(a.then(b)) == s3->multiply(s3->id_of(a), s3->id_of(b)));
}

TEST_CASE("closures of explicit generators") {
  SUBCASE("GL(3,7) pair") {
    const auto g = matrix_group(3, 7,
                                {MatModP::from_rows(7, {{3, 6, 2}, {2, 0, 1}, {0, 0, 1}}),
                                 MatModP::from_rows(7, {{0, 4, 1}, {5, 0, 3}, {0, 0, 1}})});
    CHECK(g->order() == 1176);
  }
  SUBCASE("J, K, L, Z generate a group of order 24 with eight elements of order 3") {
    const auto params = construction_w_params(7);
    std::vector<MatModP> gens;
    for (const auto& m : {params.j, params.k, params.l, params.z}) {
      gens.push_back(MatModP::from_rows(7, {{m[0], m[1]}, {m[2], m[3]}}));
    }
    const auto s = matrix_group(2, 7, gens);
    CHECK(s->order() == 24);
    const auto orders = s->element_orders();
    CHECK(std::count(orders.begin(), orders.end(), 3u) == 8);
    const ElementId j = s->id_of(gens[0]);
    const ElementId z = s->id_of(gens[3]);
    CHECK(s->element_order(j) == 4);
    CHECK(s->element_order(z) == 3);
    // J^Z = Z^-1 J Z = K.
    CHECK(s->conjugate(j, z) == s->id_of(gens[1]));
  }
  SUBCASE("trivial groups") {
    const std::vector<GroupElement> perm{Perm::identity(4)};
    CHECK(FiniteGroup::enumerate(perm)->order() == 1);
    CHECK(matrix_group(2, 3, {MatModP::identity(2, 3)})->order() == 1);
  }
}

TEST_CASE("conjugacy classes") {
  SUBCASE("classes partition G and are conjugation orbits") {
    for (const auto& g : small_groups()) {
      const auto& cc = g->conjugacy_classes();
      std::size_t total = 0;
      for (std::size_t i = 0; i < cc.classes.size(); ++i) {
        total += cc.classes[i].size();
        CHECK(g->order() % cc.classes[i].size() == 0);
        const ElementId rep = cc.classes[i].front();
        std::vector<ElementId> orbit;
        for (ElementId x = 0; x < g->order(); ++x) orbit.push_back(g->conjugate(rep, x));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        CHECK(orbit == cc.classes[i]);
        for (const ElementId x : cc.classes[i]) CHECK(cc.class_of[x] == i);
      }
      CHECK(total == g->order());
    }
  }
  SUBCASE("SL(2,3): one class of order 4, two of order 6 splitting g from g^-1") {
    const auto g = sl23();
    std::map<std::uint64_t, std::size_t> count;
    for (const auto& c : g->conjugacy_classes().classes) ++count[g->element_order(c.front())];
    CHECK(count[4] == 1);
    CHECK(count[6] == 2);
    for (ElementId x = 0; x < g->order(); ++x) {
      if (g->element_order(x) == 6) {
        CHECK(g->conjugacy_classes().class_of[x] != g->conjugacy_classes().class_of[g->invert(x)]);
      }
    }
  }
  SUBCASE("A5: one class of order 3, two of order 5") {
    const auto g = alternating(5);
    std::map<std::uint64_t, std::size_t> count;
    for (const auto& c : g->conjugacy_classes().classes) ++count[g->element_order(c.front())];
    CHECK(count[3] == 1);
    CHECK(count[5] == 2);
  }
}

TEST_CASE("derived subgroups and commutators") {
  CHECK(cyclic(12)->derived_subgroup() == std::vector<ElementId>{FiniteGroup::identity()});

  const auto q8 = quaternion8();
  std::vector<ElementId> commutators;
  for (ElementId a = 0; a < 8; ++a) {
    for (ElementId b = 0; b < 8; ++b) {
      const ElementId raw = q8->multiply(q8->multiply(q8->invert(a), q8->invert(b)), q8->multiply(a, b));
      CHECK(q8->commutator(a, b) == raw);
      commutators.push_back(raw);
    }
  }
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  CHECK(commutators.size() == 2);
  CHECK(q8->derived_subgroup() == commutators);
  CHECK(q8->derived_subgroup() == q8->center());

  for (ElementId a = 0; a < 8; ++a) CHECK(q8->commutator(a, a) == FiniteGroup::identity());

  const auto e = extraspecial(3, 2);
  CHECK(e->derived_subgroup() == e->center());
  CHECK(e->center().size() == 3);
}

TEST_CASE("subgroup closure") {
  const auto s4 = symmetric(4);
  const std::vector<ElementId> gens{s4->id_of(Perm::from_cycles(4, {{0, 1, 2, 3}}))};
  CHECK(s4->subgroup(gens).size() == 4);
  CHECK(s4->subgroup(std::vector<ElementId>{}).size() == 1);
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(wreath(symmetric(4), 3, 1000), OrderCapExceeded);
  CHECK_THROWS_AS(matrix_group(2, 5, {MatModP::from_rows(5, {{1, 2}, {2, 4}})}), SingularGenerator);
  const std::vector<GroupElement> mixed{Perm::identity(3), MatModP::identity(2, 3)};
  CHECK_THROWS_AS(FiniteGroup::enumerate(mixed), IncompatibleGenerators);
  try {
    wreath(symmetric(4), 3, 1000);
  } catch (const OrderCapExceeded& e) {
    CHECK(e.cap() == 1000);
  }
  CHECK_THROWS_AS(quaternion8()->id_of(MatModP::identity(2, 5)), IncompatibleGenerators);
  CHECK_THROWS_AS(alternating(4)->id_of(Perm::from_cycles(4, {{0, 1}})), std::out_of_range);
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"
#include "uirg/catalog.hpp"
#include "uirg/ring.hpp"

using namespace uirg;
using namespace uirg::testing;

namespace {

FiniteRing gf4_structure() {
  StructureSpec s;
  s.moduli = {2, 2};
  s.one = {1, 0};
  s.products = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}};  // x^2 = 1 + x
  return make_structure_ring(s, "GF4-structure");
}

std::vector<FiniteRing> small_rings() {
  std::vector<FiniteRing> out;
  for (const auto& e : build_catalog(16)) out.push_back(e.ring);
  return out;
}

}  // namespace

TEST_CASE("make_cyclic arithmetic and errors") {
  const auto z6 = make_cyclic(6);
  CHECK(z6.mul(2, 5) == 4);
  CHECK(z6.add(2, 5) == 1);
  const auto z4 = make_cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(characteristic(z4) == 4);
  CHECK_THROWS_AS(make_cyclic(1), RingError);
  CHECK_THROWS_AS(make_cyclic(65), RingError);
}

TEST_CASE("make_poly_quotient") {
  const auto gf4 = make_poly_quotient(2, {1, 1, 1});
  CHECK(gf4.order() == 4);
  CHECK(is_field(gf4));

  const auto dual = make_poly_quotient(2, {0, 0, 1});
  const auto m = maximal_ideal(dual);
  REQUIRE(m);
  CHECK(names_of(dual, *m) == std::set<std::string>{"0", "x"});

  const auto z3x = make_poly_quotient(3, {0, 0, 1});
  CHECK(z3x.order() == 9);
  CHECK(characteristic(z3x) == 3);
  CHECK_FALSE(is_field(z3x));
  CHECK(z3x.mul(el(z3x, "x"), el(z3x, "x")) == z3x.zero());

  CHECK_THROWS_AS(make_poly_quotient(4, {0, 0, 2}), RingError);  // not monic
  CHECK_THROWS_AS(make_poly_quotient(4, {3}), RingError);        // degree 0
  CHECK_THROWS_AS(make_poly_quotient(3, {0, 0, 0, 0, 1}), RingError);  // order 81
}

TEST_CASE("make_structure_ring") {
  const auto& xy = table_ring("Z2[x,y]/(x^2,xy,y^2)");
  CHECK(xy.order() == 8);
  // localness oracle: exactly one maximal ideal among all ideals
  const auto ideals = brute_ideals(xy);
  const std::uint64_t full = xy.all().mask();
  int maximal = 0;
  for (auto i : ideals) {
    if (i == full) continue;
    const bool is_max = std::none_of(ideals.begin(), ideals.end(), [&](auto j) {
      return j != i && j != full && (i & ~j) == 0;
    });
    maximal += is_max;
  }
  CHECK(maximal == 1);
  CHECK(is_local(xy));

  const auto& z4x = table_ring("Z4[x]/(2x,x^2)");
  CHECK(z4x.order() == 8);
  CHECK(characteristic(z4x) == 4);

  StructureSpec bad;
  bad.moduli = {2, 2};
  bad.one = {0, 1};
  bad.products = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};  // e * e = 0
  CHECK_THROWS_AS(make_structure_ring(bad), RingError);

  StructureSpec zero_one = bad;
  zero_one.one = {0, 0};
  CHECK_THROWS_AS(make_structure_ring(zero_one), RingError);

  StructureSpec nonassoc;
  nonassoc.moduli = {2, 2, 2};
  nonassoc.one = {1, 0, 0};
  // x*x = y, x*y = x, y*y = 0: (x*x)*y = 0 but x*(x*y) = y
  nonassoc.products = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                       {{0, 1, 0}, {0, 0, 1}, {0, 1, 0}},
                       {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}};
  CHECK_THROWS_AS(make_structure_ring(nonassoc), RingError);
}

TEST_CASE("direct_product") {
  const auto z2 = make_cyclic(2), z4 = make_cyclic(4);
  const auto r = direct_product(z2, z4);
  CHECK(r.order() == 8);
  CHECK(names_of(r, units(r)) == std::set<std::string>{"(1,1)", "(1,3)"});
  CHECK(r.display_name() == "Z2xZ4");

  const auto r35 = direct_product(make_cyclic(3), make_cyclic(5));
  CHECK(units(r35).size() == 8);

  const auto left = direct_product(direct_product(z2, z2), z2);
  const auto right = direct_product(z2, direct_product(z2, z2));
  CHECK(left.name(5) == "(1,0,1)");
  CHECK(is_ring_isomorphic(left, right));
  CHECK(left == right);
}

TEST_CASE("units") {
  const auto z6 = make_cyclic(6);
  CHECK(units(z6) == std::vector<Element>{1, 5});
  CHECK(units(table_ring("GF(4)")).size() == 3);
}

TEST_CASE("principal ideals") {
  const auto z6 = make_cyclic(6);
  CHECK(names_of(z6, principal_ideal(z6, 2)) == std::set<std::string>{"0", "2", "4"});
  const auto r = direct_product(make_cyclic(2), make_cyclic(4));
  CHECK(names_of(r, principal_ideal(r, el(r, "(1,0)"))) == std::set<std::string>{"(0,0)", "(1,0)"});
  for (const auto& ring : small_rings()) CHECK(principal_ideal(ring, ring.zero()).size() == 1);
}

TEST_CASE("ideal_generated_by") {
  const auto& r = table_ring("Z4[x]/(2x,x^2)");
  const auto i = ideal_generated_by(r, {el(r, "2"), el(r, "x")});
  CHECK(names_of(r, i) == std::set<std::string>{"0", "2", "x", "2+x"});
  // closure oracle: intersection of all ideals containing the generators
  CHECK(i.mask() == brute_generated(brute_ideals(r), (1ULL << el(r, "2")) | (1ULL << el(r, "x"))));
  CHECK(ideal_generated_by(r, {}).size() == 1);
  CHECK(ideal_generated_by(r, {r.one()}) == r.all());
}

TEST_CASE("ideal_product") {
  const auto z8 = make_cyclic(8);
  const auto m = *maximal_ideal(z8);
  CHECK(names_of(z8, ideal_product(z8, m, m)) == std::set<std::string>{"0", "4"});

  const auto& xy = table_ring("Z2[x,y]/(x^2,xy,y^2)");
  const auto mx = *maximal_ideal(xy);
  CHECK(ideal_product(xy, mx, mx).size() == 1);

  const Ideal zero = ideal_closure(z8, 0);
  CHECK(ideal_product(z8, m, zero) == zero);
}

TEST_CASE("all_ideals against subset scan") {
  CHECK(all_ideals(make_cyclic(4)).size() == 3);
  CHECK(all_ideals(make_cyclic(6)).size() == 4);
  const auto& xy = table_ring("Z2[x,y]/(x^2,xy,y^2)");
  CHECK(brute_ideals(xy).size() == 6);
  CHECK(all_ideals(xy).size() == 6);

  for (const auto& r : small_rings()) {
    if (r.order() > 12) continue;
    auto expected = brute_ideals(r);
    std::vector<std::uint64_t> got;
    for (const auto& i : all_ideals(r)) got.push_back(i.mask());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == expected, r.display_name());
  }
}

TEST_CASE("characteristic") {
  CHECK(characteristic(direct_product(make_cyclic(2), make_cyclic(4))) == 4);
  CHECK(characteristic(table_ring("GF(8)")) == 2);
  CHECK(characteristic(table_ring("Z9[x]/(3x,x^2)")) == 9);
}

TEST_CASE("localness and fields") {
  const auto z4 = make_cyclic(4);
  REQUIRE(maximal_ideal(z4));
  CHECK(names_of(z4, *maximal_ideal(z4)) == std::set<std::string>{"0", "2"});
  CHECK_FALSE(is_local(make_cyclic(6)));
  const auto& f = table_ring("Z2[x,y]/(x^2,y^2)");
  REQUIRE(maximal_ideal(f));
  CHECK(maximal_ideal(f)->size() == 8);
  CHECK(is_field(make_cyclic(7)));
  CHECK_FALSE(is_field(z4));
}

TEST_CASE("minimal_generator_count matches subset search") {
  CHECK(brute_generator_count(make_cyclic(8)) == 1);
  CHECK(minimal_generator_count(make_cyclic(8)).count == 1);
  CHECK(brute_generator_count(table_ring("Z2[x,y]/(x^2,xy,y^2)")) == 2);
  CHECK(minimal_generator_count(table_ring("Z2[x,y]/(x^2,xy,y^2)")).count == 2);
  CHECK(brute_generator_count(table_ring("Z4[x]/(2x,x^2)")) == 2);
  CHECK(minimal_generator_count(table_ring("Z4[x]/(2x,x^2)")).count == 2);
  CHECK_THROWS_AS(minimal_generator_count(make_cyclic(6)), RingError);

  for (const auto& r : local_ring_table()) {
    if (r.order() > 16) continue;
    CHECK_MESSAGE(minimal_generator_count(r).count == brute_generator_count(r), r.display_name());
  }
}

TEST_CASE("generator witness is independent of scan order") {
  // every ordering of the maximal ideal for orders <= 16
  for (const auto& r : local_ring_table()) {
    if (r.order() > 16) continue;
    auto m = maximal_ideal(r)->members();
    const int expected = minimal_generator_count(r).count;
    std::sort(m.begin(), m.end());
    do {
      const auto g = minimal_generator_count(r, m);
      REQUIRE(static_cast<int>(g.witness.size()) == expected);
      REQUIRE(ideal_generated_by(r, g.witness) == *maximal_ideal(r));
    } while (std::next_permutation(m.begin(), m.end()));
  }
  // sampled orderings up to order 27
  std::mt19937 rng(7);
  for (const auto& r : local_ring_table()) {
    if (r.order() > 27) continue;
    std::vector<Element> all(r.order());
    std::iota(all.begin(), all.end(), 0);
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(all.begin(), all.end(), rng);
      CHECK(minimal_generator_count(r, all).witness.size() ==
            static_cast<std::size_t>(minimal_generator_count(r).count));
    }
  }
}

TEST_CASE("is_principal_local") {
  CHECK(is_principal_local(make_cyclic(8)));
  CHECK_FALSE(is_principal_local(table_ring("Z4[x]/(2x,x^2)")));
  for (const auto& name : {"Z2", "GF(4)", "GF(9)", "Z13"}) CHECK(is_principal_local(table_ring(name)));
  CHECK_THROWS_AS(is_principal_local(make_cyclic(6)), RingError);

  // agrees with "every ideal is principal" for every local ring of order <= 27
  for (const auto& r : local_ring_table()) {
    if (r.order() > 27) continue;
    std::set<std::uint64_t> principal;
    for (Element e = 0; e < r.order(); ++e) principal.insert(principal_ideal(r, e).mask());
    const auto ideals = all_ideals(r);
    const bool every = std::all_of(ideals.begin(), ideals.end(),
                                   [&](const Ideal& i) { return principal.count(i.mask()) > 0; });
    CHECK_MESSAGE(is_principal_local(r) == every, r.display_name());
  }
}

TEST_CASE("ring isomorphism") {
  CHECK_FALSE(is_ring_isomorphic(make_cyclic(4), table_ring("Z2[x]/(x^2)")));
  CHECK(is_ring_isomorphic(direct_product(make_cyclic(2), make_cyclic(3)), make_cyclic(6)));
  CHECK(is_ring_isomorphic(table_ring("GF(4)"), gf4_structure()));
  CHECK_FALSE(is_ring_isomorphic(table_ring("Z4[x]/(2x,x^2)"), table_ring("Z2[x,y]/(x^2,xy,y^2)")));
  CHECK_FALSE(is_ring_isomorphic(table_ring("Z4[x]/(2x,x^2)"), table_ring("Z4[x]/(2x,x^2-2)")));
  CHECK_THROWS_AS(is_ring_isomorphic(make_cyclic(64), make_cyclic(64)), RingError);

  const auto map = ring_isomorphism(table_ring("GF(4)"), gf4_structure());
  REQUIRE(map);
  const auto& a = table_ring("GF(4)");
  const auto b = gf4_structure();
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      CHECK((*map)[a.add(x, y)] == b.add((*map)[x], (*map)[y]));
      CHECK((*map)[a.mul(x, y)] == b.mul((*map)[x], (*map)[y]));
    }
}

TEST_CASE("isomorphism is reflexive and symmetric on the catalog") {
  const auto rings = small_rings();
  for (std::size_t i = 0; i < rings.size(); ++i) {
    CHECK(is_ring_isomorphic(rings[i], rings[i]));
    for (std::size_t j = i + 1; j < rings.size(); ++j) {
      if (rings[i].order() != rings[j].order()) continue;
      const bool ij = is_ring_isomorphic(rings[i], rings[j]);
      CHECK(ij == is_ring_isomorphic(rings[j], rings[i]));
      // catalog entries are pairwise non-isomorphic factor multisets
      CHECK_MESSAGE(!ij, (rings[i].display_name() + " vs " + rings[j].display_name()));
      if (ij) {
        CHECK(characteristic(rings[i]) == characteristic(rings[j]));
        CHECK(units(rings[i]).size() == units(rings[j]).size());
      }
    }
  }
}

TEST_CASE("constructor outputs satisfy every ring axiom") {
  for (const auto& r : local_ring_table()) CHECK_NOTHROW(r.validate());
  for (const auto& e : build_catalog(16)) CHECK_NOTHROW(e.ring.validate());
}

TEST_CASE("rebuild reproduces tables") {
  for (const auto& e : build_catalog(32)) {
    const auto again = rebuild(e.ring.spec());
    CHECK(again == e.ring);
    CHECK(table_digest(again) == table_digest(e.ring));
  }
}

TEST_CASE("unit group properties") {
  for (const auto& r : small_rings()) {
    const auto us = units(r);
    const std::set<Element> s(us.begin(), us.end());
    CHECK(s.count(r.one()) == 1);
    for (Element a : us)
      for (Element b : us) CHECK(s.count(r.mul(a, b)) == 1);
  }
  const auto& t = local_ring_table();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[i].order() * t[j].order() > 32) continue;
      const auto p = direct_product(t[i], t[j]);
      CHECK(units(p).size() == units(t[i]).size() * units(t[j]).size());
    }
}

TEST_CASE("ideals from every operation are ideals; containment matches membership") {
  for (const auto& r : small_rings()) {
    std::vector<Ideal> principal;
    for (Element x = 0; x < r.order(); ++x) {
      principal.push_back(principal_ideal(r, x));
      CHECK(brute_is_ideal(r, principal.back().mask()));
    }
    for (Element x = 0; x < r.order(); ++x)
      for (Element y = 0; y < r.order(); ++y)
        CHECK(principal[x].subset_of(principal[y]) == principal[y].contains(x));
    for (const auto& i : all_ideals(r)) CHECK(brute_is_ideal(r, i.mask()));
    if (const auto m = maximal_ideal(r)) {
      CHECK(brute_is_ideal(r, m->mask()));
      CHECK(brute_is_ideal(r, ideal_product(r, *m, *m).mask()));
    }
  }
}

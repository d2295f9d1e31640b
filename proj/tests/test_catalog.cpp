#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "uirg/catalog.hpp"
#include "uirg/ring_parser.hpp"

using namespace uirg;
using namespace uirg::testing;

namespace {

std::set<std::string> display_names(const std::vector<CatalogEntry>& cat) {
  std::set<std::string> out;
  for (const auto& e : cat) out.insert(e.display_name);
  return out;
}

}  // namespace

TEST_CASE("local table") {
  const auto& t = local_ring_table();
  CHECK(t.size() == 30);
  int fields = 0, principal = 0;
  for (const auto& r : t) {
    REQUIRE(is_local(r));
    fields += is_field(r);
    principal += !is_field(r) && is_principal_local(r);
  }
  CHECK(fields == 10);
  CHECK(principal == 14);
  CHECK(local_table_index("Z2") == 0);
  CHECK(local_table_index("nope") == -1);
}

TEST_CASE("build_catalog") {
  CHECK(display_names(build_catalog(2)) == std::set<std::string>{"Z2"});
  CHECK(display_names(build_catalog(4)) ==
        std::set<std::string>{"Z2", "Z3", "Z4", "Z2[x]/(x^2)", "GF(4)", "Z2xZ2"});

  const auto eight = display_names(build_catalog(8));
  for (const auto& name : {"Z2xZ2xZ2", "Z2xZ4", "Z2xZ2[x]/(x^2)", "Z2xGF(4)", "Z4[x]/(2x,x^2)",
                           "Z2[x,y]/(x^2,xy,y^2)", "Z8", "Z2[x]/(x^3)", "GF(8)"})
    CHECK_MESSAGE(eight.count(name) == 1, name);

  CHECK(build_catalog(16).size() == 55);
  CHECK(build_catalog(32).size() == 132);
  CHECK_THROWS_AS(build_catalog(33), RingError);
}

TEST_CASE("catalog entries are consistent and deterministic") {
  const auto a = build_catalog(32);
  const auto b = build_catalog(32);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].display_name == b[i].display_name);
    CHECK(a[i].ring == b[i].ring);
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto key = [](const CatalogEntry& e) { return std::make_pair(e.ring.order(), e.display_name); };
    CHECK(key(a[i - 1]) < key(a[i]));
  }
  for (const auto& e : a) {
    int product = 1;
    for (const auto& f : e.factors) {
      CHECK(is_local(f));
      product *= f.order();
    }
    CHECK(product == e.ring.order());
    CHECK(e.local() == is_local(e.ring));
  }
}

TEST_CASE("display names parse back to isomorphic rings") {
  for (const auto& e : build_catalog(32)) {
    const auto p = parse_ring_spec(e.display_name);
    REQUIRE(p.ring.order() == e.ring.order());
    CHECK(characteristic(p.ring) == characteristic(e.ring));
    CHECK(units(p.ring).size() == units(e.ring).size());
    CHECK(p.factors.size() == e.factors.size());
    if (e.ring.order() <= 16) CHECK_MESSAGE(is_ring_isomorphic(p.ring, e.ring), e.display_name);
  }
}

TEST_CASE("parser examples") {
  const auto a = parse_ring_spec("Z2xZ4");
  CHECK(a.ring.order() == 8);
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].display_name() == "Z2");
  CHECK(a.factors[1].display_name() == "Z4");

  const auto b = parse_ring_spec("Z4[x]/(2x,x^2)");
  CHECK(b.ring.order() == 8);
  CHECK(is_ring_isomorphic(b.ring, table_ring("Z4[x]/(2x,x^2)")));

  const auto c = parse_ring_spec("Z2[x]/(x^3+1)");
  CHECK(c.ring.order() == 8);
  CHECK_FALSE(is_local(c.ring));
  REQUIRE(c.factors.size() == 2);
  CHECK(c.factors[0].order() * c.factors[1].order() == 8);

  const auto z6 = parse_ring_spec("Z6");
  REQUIRE(z6.factors.size() == 2);
  CHECK(z6.factors[0].display_name() == "Z2");
  CHECK(z6.factors[1].display_name() == "Z3");

  CHECK(is_field(parse_ring_spec("GF(4)").ring));
  CHECK(is_ring_isomorphic(parse_ring_spec("Z2[x]/(x^2+x+1)").ring, table_ring("GF(4)")));
  CHECK(is_ring_isomorphic(parse_ring_spec("Z2[x,y]/(y^2,x^2)").ring, table_ring("Z2[x,y]/(x^2,y^2)")));
}

TEST_CASE("parser errors carry positions") {
  const auto position_of = [](const std::string& text) -> long {
    try {
      parse_ring_spec(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("Q5") == 0);
  CHECK(position_of("Z2xQ") == 3);
  CHECK(position_of("Z2x") == 3);
  CHECK(position_of("") == 0);
  CHECK(position_of("Z4[x]/(2x^2)") >= 0);   // not monic
  CHECK(position_of("GF(6)") >= 0);
  CHECK(position_of("Z2[x,y]/(x^3,y)") >= 0);  // unsupported presentation
  CHECK(position_of("Z100") >= 0);              // order above the limit
}

TEST_CASE("figure rings") {
  const auto& figs = figure_rings();
  REQUIRE(figs.size() == 6);
  for (std::size_t i = 0; i < figs.size(); ++i) {
    CHECK(figs[i].number == static_cast<int>(i) + 3);
    CHECK_NOTHROW(parse_ring_spec(figs[i].ring_spec));
  }
}

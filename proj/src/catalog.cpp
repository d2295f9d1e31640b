#include "uirg/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace uirg {

namespace {

using BasisProducts = std::map<std::pair<int, int>, std::vector<int>>;

// Unlisted basis products are zero; products with basis 0 (the unity) are implied.
FiniteRing structure(std::vector<int> moduli, std::vector<std::string> basis_names, const BasisProducts& products,
                     std::string display_name) {
  const std::size_t rank = moduli.size();
  StructureSpec spec;
  spec.moduli = std::move(moduli);
  spec.basis_names = std::move(basis_names);
  spec.one.assign(rank, 0);
  spec.one[0] = 1;
  spec.products.assign(rank, std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0)));
  for (std::size_t i = 0; i < rank; ++i) {
    spec.products[0][i][i] = 1;
    spec.products[i][0][i] = 1;
  }
  for (const auto& [ij, v] : products) {
    spec.products[ij.first][ij.second] = v;
    spec.products[ij.second][ij.first] = v;
  }
  return make_structure_ring(std::move(spec), std::move(display_name));
}

std::vector<FiniteRing> make_table() {
  std::vector<FiniteRing> t;
  for (int p : {2, 3, 5, 7, 11, 13}) t.push_back(make_cyclic(p));
  t.push_back(make_poly_quotient(2, {1, 1, 1}, "GF(4)"));
  t.push_back(make_poly_quotient(2, {1, 1, 0, 1}, "GF(8)"));
  t.push_back(make_poly_quotient(3, {1, 0, 1}, "GF(9)"));
  t.push_back(make_poly_quotient(2, {1, 1, 0, 0, 1}, "GF(16)"));

  for (int n : {4, 8, 16, 9, 27, 25}) t.push_back(make_cyclic(n));
  t.push_back(make_poly_quotient(2, {0, 0, 1}, "Z2[x]/(x^2)"));
  t.push_back(make_poly_quotient(2, {0, 0, 0, 1}, "Z2[x]/(x^3)"));
  t.push_back(make_poly_quotient(2, {0, 0, 0, 0, 1}, "Z2[x]/(x^4)"));
  t.push_back(make_poly_quotient(3, {0, 0, 1}, "Z3[x]/(x^2)"));
  t.push_back(make_poly_quotient(3, {0, 0, 0, 1}, "Z3[x]/(x^3)"));
  t.push_back(make_poly_quotient(5, {0, 0, 1}, "Z5[x]/(x^2)"));
  t.push_back(make_poly_quotient(4, {-2, 0, 1}, "Z4[x]/(x^2-2)"));
  t.push_back(structure({4, 2}, {"1", "x"}, {{{1, 1}, {2, 0}}}, "Z4[x]/(2x,x^2-2)"));

  t.push_back(structure({4, 2}, {"1", "x"}, {}, "Z4[x]/(2x,x^2)"));
  t.push_back(structure({2, 2, 2}, {"1", "x", "y"}, {}, "Z2[x,y]/(x^2,xy,y^2)"));
  t.push_back(structure({2, 2, 2, 2}, {"1", "x", "y", "xy"}, {{{1, 2}, {0, 0, 0, 1}}}, "Z2[x,y]/(x^2,y^2)"));
  t.push_back(make_poly_quotient(4, {0, 0, 1}, "Z4[x]/(x^2)"));
  t.push_back(structure({8, 2}, {"1", "x"}, {}, "Z8[x]/(2x,x^2)"));
  t.push_back(structure({9, 3}, {"1", "x"}, {}, "Z9[x]/(3x,x^2)"));
  return t;
}

}  // namespace

const std::vector<FiniteRing>& local_ring_table() {
  static const std::vector<FiniteRing> table = make_table();
  return table;
}

int local_table_index(const std::string& display_name) {
  const auto& t = local_ring_table();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].display_name() == display_name) return static_cast<int>(i);
  return -1;
}

std::vector<CatalogEntry> build_catalog(int max_order) {
  if (max_order > kMaxCatalogOrder)
    throw RingError("catalog is limited to order " + std::to_string(kMaxCatalogOrder));
  const auto& table = local_ring_table();
  std::vector<CatalogEntry> out;
  std::vector<int> chosen;
  std::function<void(std::size_t, int)> extend = [&](std::size_t start, int order) {
    if (!chosen.empty()) {
      std::vector<FiniteRing> factors;
      for (int i : chosen) factors.push_back(table[i]);
      FiniteRing ring = factors.front();
      for (std::size_t k = 1; k < factors.size(); ++k) ring = direct_product(ring, factors[k]);
      std::string name = ring.display_name();
      out.push_back(CatalogEntry{std::move(ring), std::move(factors), std::move(name)});
    }
    for (std::size_t i = start; i < table.size(); ++i) {
      if (static_cast<long long>(order) * table[i].order() > max_order) continue;
      chosen.push_back(static_cast<int>(i));
      extend(i, order * table[i].order());
      chosen.pop_back();
    }
  };
  extend(0, 1);
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::make_pair(a.ring.order(), a.display_name) < std::make_pair(b.ring.order(), b.display_name);
  });
  return out;
}

const std::vector<FigureRing>& figure_rings() {
  static const std::vector<FigureRing> figures = {
      {3, "Z3xZ5"}, {4, "Z2xZ2xZ2"}, {5, "Z3xZ3"}, {6, "Z2xZ4"}, {7, "Z2xZ3"}, {8, "Z2[x,y]/(x^2,y^2)"},
  };
  return figures;
}

}  // namespace uirg

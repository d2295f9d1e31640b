#pragma once

#include <string>
#include <vector>

#include "uirg/ring.hpp"

namespace uirg {

inline constexpr int kMaxCatalogOrder = 32;

struct CatalogEntry {
  FiniteRing ring;
  std::vector<FiniteRing> factors;  // local, in table order
  std::string display_name;

  bool local() const { return factors.size() == 1; }
};

/// The curated local rings: fields, principal local rings, then non-principal ones.
const std::vector<FiniteRing>& local_ring_table();

/// Position of a local ring in the table, matched by display name; -1 if absent.
int local_table_index(const std::string& display_name);

/// All products (factors with repetition, order <= max_order) of the local table,
/// one per factor multiset, sorted by (order, display name).
std::vector<CatalogEntry> build_catalog(int max_order);

/// Rings whose graphs are drawn as figures, with the figure number.
struct FigureRing {
  int number;
  std::string ring_spec;
};

const std::vector<FigureRing>& figure_rings();

}  // namespace uirg

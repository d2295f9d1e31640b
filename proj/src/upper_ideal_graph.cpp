#include "uirg/upper_ideal_graph.hpp"

#include <bit>
#include <numeric>

namespace uirg {

bool adjacent(const FiniteRing& r, Element x, Element y) {
  const auto is_unit = unit_mask(r);
  if (x < 0 || y < 0 || x >= r.order() || y >= r.order()) throw RingError("element index out of range");
  if (is_unit[x] || is_unit[y]) throw RingError("adjacency is defined on non-units only");
  if (x == y) throw RingError("adjacency needs two distinct elements");
  for (Element z = 0; z < r.order(); ++z) {
    if (is_unit[z]) continue;
    const Ideal iz = principal_ideal(r, z);
    if (iz.contains(x) && iz.contains(y)) return true;
  }
  return false;
}

UirgGraph upper_ideal_graph(const FiniteRing& r) {
  const auto is_unit = unit_mask(r);
  UirgGraph out;
  std::vector<int> position(r.order(), -1);
  for (Element e = 0; e < r.order(); ++e)
    if (!is_unit[e]) {
      position[e] = static_cast<int>(out.vertex_elements.size());
      out.vertex_elements.push_back(e);
    }
  out.graph = SimpleGraph(static_cast<int>(out.vertex_elements.size()));
  // every principal ideal of a non-unit is a clique
  for (Element z : out.vertex_elements) {
    const auto members = principal_ideal(r, z).members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        out.graph.add_edge(position[members[i]], position[members[j]]);
  }
  std::vector<std::string> labels;
  for (Element e : out.vertex_elements) labels.push_back(r.name(e));
  out.graph.set_labels(std::move(labels));
  return out;
}

std::string_view rule_id(Rule rule) {
  switch (rule) {
    case Rule::NonlocalFieldPair: return "nonlocal-F1xF2";
    case Rule::LocalPrincipal: return "local-principal";
    case Rule::SixRingList: return "six-ring-list";
    case Rule::LocalPrincipalColine: return "local-principal-coline";
    case Rule::CharOddPrime: return "char-p-odd";
    case Rule::CharTwoPowerAtLeast8: return "char-2k-ge8";
    case Rule::CharFourConditions: return "char-4-conditions";
    case Rule::CharTwoConditions: return "char-2-conditions";
  }
  return "unknown";
}

void check_factor_metadata(const FiniteRing& r, const std::vector<FiniteRing>& factors) {
  if (factors.empty()) throw RingError("factor list is empty for " + r.display_name());
  long long order = 1;
  long long unit_count = 1;
  int char_lcm = 1;
  for (const auto& f : factors) {
    if (!is_local(f)) throw RingError("factor " + f.display_name() + " is not local");
    order *= f.order();
    unit_count *= static_cast<long long>(units(f).size());
    char_lcm = std::lcm(char_lcm, characteristic(f));
  }
  if (order != r.order() || unit_count != static_cast<long long>(units(r).size()) ||
      char_lcm != characteristic(r))
    throw RingError("factors do not multiply to " + r.display_name());
  if (factors.size() == 1 && !is_local(r)) throw RingError(r.display_name() + " is not local");
  if (r.order() <= 16) {
    FiniteRing product = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) product = direct_product(product, factors[i]);
    if (!is_ring_isomorphic(product, r)) throw RingError("factor product is not isomorphic to " + r.display_name());
  }
}

Prediction classify_line(const FiniteRing& r, const std::vector<FiniteRing>& factors) {
  check_factor_metadata(r, factors);
  if (factors.size() >= 2) {
    const bool holds = factors.size() == 2 && is_field(factors[0]) && is_field(factors[1]);
    return {holds, Rule::NonlocalFieldPair};
  }
  return {is_principal_local(r), Rule::LocalPrincipal};
}

const std::vector<FiniteRing>& six_coline_rings() {
  static const std::vector<FiniteRing> rings = [] {
    const auto z2 = make_cyclic(2), z3 = make_cyclic(3), z4 = make_cyclic(4);
    const auto dual = make_poly_quotient(2, {0, 0, 1});
    return std::vector<FiniteRing>{direct_product(direct_product(z2, z2), z2),
                                   direct_product(z2, z2),
                                   direct_product(z2, z3),
                                   direct_product(z2, z4),
                                   direct_product(z2, dual),
                                   direct_product(z3, z3)};
  }();
  return rings;
}

bool has_square_zero_generator_pair(const FiniteRing& r) {
  const auto m = maximal_ideal(r);
  if (!m) throw RingError("ring " + r.display_name() + " is not local");
  const auto members = m->members();
  for (Element a : members) {
    if (r.mul(a, a) != r.zero()) continue;
    for (Element b : members) {
      if (b <= a || r.mul(b, b) != r.zero() || r.mul(a, b) == r.zero()) continue;
      if (ideal_generated_by(r, {a, b}) == *m) return true;
    }
  }
  return false;
}

Prediction classify_coline(const FiniteRing& r, const std::vector<FiniteRing>& factors) {
  check_factor_metadata(r, factors);
  if (factors.size() >= 2) {
    bool holds = false;
    for (const auto& s : six_coline_rings())
      if (s.order() == r.order() && is_ring_isomorphic(s, r)) holds = true;
    return {holds, Rule::SixRingList};
  }
  if (is_principal_local(r)) return {true, Rule::LocalPrincipalColine};

  const int c = characteristic(r);
  if (c % 2 == 1) return {false, Rule::CharOddPrime};
  if (c >= 8) return {false, Rule::CharTwoPowerAtLeast8};

  const Ideal m = *maximal_ideal(r);
  const bool residue_two = r.order() / m.size() == 2;
  const bool m_squared_zero = ideal_product(r, m, m).size() == 1;
  if (c == 4) {
    bool two_m_zero = true;
    for (Element x : m.members()) two_m_zero = two_m_zero && r.add(x, x) == r.zero();
    return {residue_two && m_squared_zero && two_m_zero, Rule::CharFourConditions};
  }
  bool holds = residue_two && m_squared_zero;
  if (residue_two && !m_squared_zero)
    holds = minimal_generator_count(r).count == 2 && has_square_zero_generator_pair(r);
  return {holds, Rule::CharTwoConditions};
}

RingVerdict classify(const FiniteRing& r, const std::vector<FiniteRing>& factors) {
  return {classify_line(r, factors), classify_coline(r, factors)};
}

SimpleGraph expected_nonlocal_field_graph(int q1, int q2) {
  if (q1 < 2 || q2 < 2) throw RingError("field orders must be at least 2");
  return join(complete(1), disjoint_union(complete(q1 - 1), complete(q2 - 1)));
}

}  // namespace uirg

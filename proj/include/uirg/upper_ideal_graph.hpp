#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "uirg/graph.hpp"
#include "uirg/ring.hpp"

namespace uirg {

/// Upper ideal relation graph: non-units of R, with x ~ y when both lie in (z)
/// for some non-unit z. The witness z may be x or y itself.
struct UirgGraph {
  SimpleGraph graph;
  std::vector<Element> vertex_elements;  // ascending, one per graph vertex
};

/// Throws RingError when x or y is a unit or x == y.
bool adjacent(const FiniteRing& r, Element x, Element y);

UirgGraph upper_ideal_graph(const FiniteRing& r);

enum class Rule {
  NonlocalFieldPair,      // nonlocal-F1xF2
  LocalPrincipal,         // local-principal
  SixRingList,            // six-ring-list
  LocalPrincipalColine,   // local-principal-coline
  CharOddPrime,           // char-p-odd
  CharTwoPowerAtLeast8,   // char-2k-ge8
  CharFourConditions,     // char-4-conditions
  CharTwoConditions,      // char-2-conditions
};

std::string_view rule_id(Rule rule);

/// One ring-side prediction and the clause that produced it.
struct Prediction {
  bool holds = false;
  Rule rule = Rule::LocalPrincipal;
};

struct RingVerdict {
  Prediction line;
  Prediction coline;
};

/// Throws RingError when the factor list cannot describe r.
void check_factor_metadata(const FiniteRing& r, const std::vector<FiniteRing>& factors);

Prediction classify_line(const FiniteRing& r, const std::vector<FiniteRing>& factors);
Prediction classify_coline(const FiniteRing& r, const std::vector<FiniteRing>& factors);
RingVerdict classify(const FiniteRing& r, const std::vector<FiniteRing>& factors);

/// The six non-local rings whose graphs are complements of line graphs.
const std::vector<FiniteRing>& six_coline_rings();

/// Local non-principal characteristic-2 test: some pair generating M with
/// x1^2 = x2^2 = 0 and x1*x2 != 0.
bool has_square_zero_generator_pair(const FiniteRing& r);

/// K1 joined with K_{q1-1} + K_{q2-1}.
SimpleGraph expected_nonlocal_field_graph(int q1, int q2);

}  // namespace uirg

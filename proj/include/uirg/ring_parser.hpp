#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "uirg/ring.hpp"

namespace uirg {

/// Syntax or semantic failure in a ring presentation; `position` is a 0-based
/// byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

struct ParsedRing {
  FiniteRing ring;
  std::vector<FiniteRing> factors;  // local factors, in local-table order
};

// Grammar:
//   ring  := atom ("x" atom)*
//   atom  := "Z" int | "GF(" int ")" | "Z" int "[x]/(" polys ")" | "Z" int "[x,y]/(" polys ")"
//   polys := poly ("," poly)*
// Polynomials use integer coefficients, "^" for powers and implicit products ("2x", "xy").
// A single monic generator in x gives a polynomial quotient; other presentations are
// looked up in a table of supported rings. Non-local atoms are split into local factors
// (CRT for Z_n, idempotents otherwise) matched against the curated local table.
ParsedRing parse_ring_spec(const std::string& text);

/// Local factors of r, each matched against the local table up to isomorphism.
std::vector<FiniteRing> local_factors(const FiniteRing& r);

}  // namespace uirg

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace uirg {

/// Index of an element inside one particular FiniteRing.
using Element = int;

/// Largest ring order stored with full tables.
inline constexpr int kMaxRingOrder = 64;
/// Largest order accepted by the isomorphism search.
inline constexpr int kMaxIsomorphismOrder = 32;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction provenance. Rebuilding from a spec reproduces the tables exactly.

struct CyclicSpec {
  int n = 0;
};

struct PolyQuotientSpec {
  int n = 0;
  std::vector<int> modulus;  // low degree first, monic
};

struct StructureSpec {
  std::vector<int> moduli;
  std::vector<int> one;
  // products[i][j] is the coefficient vector of basis_i * basis_j
  std::vector<std::vector<std::vector<int>>> products;
  std::vector<std::string> basis_names;
};

struct RingSpec;

struct ProductSpec {
  std::vector<RingSpec> factors;
};

struct RingSpec {
  std::variant<CyclicSpec, PolyQuotientSpec, StructureSpec, ProductSpec> construction;
  std::string name;
};

/// Subset of element indices of a ring of order <= 64, stored as a bitmask.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::uint64_t mask) : mask_(mask) {}

  bool contains(Element e) const { return (mask_ >> e) & 1U; }
  int size() const;
  std::uint64_t mask() const { return mask_; }
  std::vector<Element> members() const;
  bool subset_of(const Ideal& other) const { return (mask_ & ~other.mask_) == 0; }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Finite commutative ring with unity, stored as full addition and
/// multiplication tables over element indices 0..order-1.
class FiniteRing {
 public:
  FiniteRing(int order, std::vector<std::uint8_t> add, std::vector<std::uint8_t> mul,
             Element zero, Element one, std::vector<std::string> names, RingSpec spec);

  int order() const { return order_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  /// k * a for a non-negative integer k.
  Element scale(int k, Element a) const;

  const std::string& name(Element e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  const RingSpec& spec() const { return spec_; }
  const std::string& display_name() const { return spec_.name; }

  /// Element index for a name, if present.
  std::optional<Element> find(const std::string& name) const;

  Ideal all() const;

  /// Exhaustive check of every ring axiom; throws RingError on the first failure.
  void validate() const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.order_ == b.order_ && a.add_ == b.add_ && a.mul_ == b.mul_ && a.zero_ == b.zero_ &&
           a.one_ == b.one_ && a.names_ == b.names_;
  }

 private:
  int order_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  Element zero_;
  Element one_;
  std::vector<std::string> names_;
  RingSpec spec_;
};

// Constructors

FiniteRing make_cyclic(int n);
FiniteRing make_cyclic(int n, std::string display_name);

/// Z_n[x]/(f) for monic f given low degree first.
FiniteRing make_poly_quotient(int n, std::vector<int> modulus);
FiniteRing make_poly_quotient(int n, std::vector<int> modulus, std::string display_name);

/// Ring on the additive group (+) Z_{m_i} with basis e_i and bilinear products.
/// Basis names default to "1", "x", "y", ... in order.
FiniteRing make_structure_ring(StructureSpec spec, std::string display_name = {});

FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s);

/// Re-runs the constructor recorded in a spec.
FiniteRing rebuild(const RingSpec& spec);

// Queries

std::vector<Element> units(const FiniteRing& r);
std::vector<bool> unit_mask(const FiniteRing& r);
Ideal principal_ideal(const FiniteRing& r, Element x);
Ideal ideal_generated_by(const FiniteRing& r, const std::vector<Element>& generators);
Ideal ideal_product(const FiniteRing& r, const Ideal& i, const Ideal& j);
/// Closure of a set under addition and multiplication by ring elements.
Ideal ideal_closure(const FiniteRing& r, std::uint64_t seed);
bool is_ideal(const FiniteRing& r, const Ideal& i);

/// Every ideal, found by breadth-first adjunction of single generators.
std::vector<Ideal> all_ideals(const FiniteRing& r);

/// Additive order of one.
int characteristic(const FiniteRing& r);

bool is_field(const FiniteRing& r);

/// Unique maximal ideal when the non-units are closed under addition.
std::optional<Ideal> maximal_ideal(const FiniteRing& r);
inline bool is_local(const FiniteRing& r) { return maximal_ideal(r).has_value(); }

/// |R/M| for a local ring.
int residue_field_order(const FiniteRing& r);

struct GeneratorCount {
  int count = 0;
  std::vector<Element> witness;
};

/// Minimal number of generators of the maximal ideal of a local ring, with a
/// witness generating set. Candidates are scanned in `order` (ascending index
/// when empty).
GeneratorCount minimal_generator_count(const FiniteRing& r, const std::vector<Element>& order = {});

/// True when the maximal ideal is principal (equivalently, every ideal is).
bool is_principal_local(const FiniteRing& r);

bool is_ring_isomorphic(const FiniteRing& r, const FiniteRing& s);
/// Table-preserving bijection r -> s, if one exists.
std::optional<std::vector<Element>> ring_isomorphism(const FiniteRing& r, const FiniteRing& s);

/// FNV-1a digest of both tables, rendered as 16 hex digits.
std::string table_digest(const FiniteRing& r);

}  // namespace uirg

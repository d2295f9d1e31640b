#include "uirg/ring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace uirg {

namespace {

std::uint64_t bit(Element e) { return std::uint64_t{1} << e; }

std::string join_names(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Mixed-radix index with the first coordinate least significant.
int encode(const std::vector<int>& coeffs, const std::vector<int>& radices) {
  int idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * radices[i] + coeffs[i];
  return idx;
}

std::vector<int> decode(int idx, const std::vector<int>& radices) {
  std::vector<int> c(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    c[i] = idx % radices[i];
    idx /= radices[i];
  }
  return c;
}

std::string term_name(int coeff, const std::string& basis) {
  if (basis == "1") return std::to_string(coeff);
  if (coeff == 1) return basis;
  return std::to_string(coeff) + basis;
}

std::string linear_name(const std::vector<int>& coeffs, const std::vector<std::string>& basis) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.push_back(term_name(coeffs[i], basis[i]));
  return terms.empty() ? "0" : join_names(terms, "+");
}

std::string monomial_name(int degree) {
  if (degree == 0) return "1";
  if (degree == 1) return "x";
  return "x^" + std::to_string(degree);
}

std::string poly_display(int n, const std::vector<int>& f) {
  std::vector<std::string> terms;
  for (std::size_t i = f.size(); i-- > 0;) {
    int c = mod(f[i], n);
    if (c != 0) terms.push_back(term_name(c, monomial_name(static_cast<int>(i))));
  }
  return "Z" + std::to_string(n) + "[x]/(" + join_names(terms, "+") + ")";
}

void check_order(long long order) {
  if (order < 2) throw RingError("ring order must be at least 2");
  if (order > kMaxRingOrder)
    throw RingError("ring order " + std::to_string(order) + " exceeds the table cap of " +
                    std::to_string(kMaxRingOrder));
}

std::vector<std::string> product_components(const FiniteRing& r, Element e) {
  const std::string& name = r.name(e);
  if (!std::holds_alternative<ProductSpec>(r.spec().construction)) return {name};
  std::vector<std::string> parts;
  std::string inner = name.substr(1, name.size() - 2);
  std::stringstream ss(inner);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  return parts;
}

std::vector<RingSpec> product_factors(const RingSpec& spec) {
  if (const auto* p = std::get_if<ProductSpec>(&spec.construction)) return p->factors;
  return {spec};
}

}  // namespace

// Ideal

int Ideal::size() const { return std::popcount(mask_); }

std::vector<Element> Ideal::members() const {
  std::vector<Element> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// FiniteRing

FiniteRing::FiniteRing(int order, std::vector<std::uint8_t> add, std::vector<std::uint8_t> mul,
                       Element zero, Element one, std::vector<std::string> names, RingSpec spec)
    : order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(static_cast<std::size_t>(order), 0),
      zero_(zero),
      one_(one),
      names_(std::move(names)),
      spec_(std::move(spec)) {
  check_order(order_);
  if (add_.size() != static_cast<std::size_t>(order_ * order_) || mul_.size() != add_.size() ||
      names_.size() != static_cast<std::size_t>(order_))
    throw RingError("table dimensions do not match the ring order");
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (add_[a * order_ + b] == zero_) neg_[a] = static_cast<std::uint8_t>(b);
}

Element FiniteRing::scale(int k, Element a) const {
  Element acc = zero_;
  for (int i = 0; i < k; ++i) acc = add(acc, a);
  return acc;
}

std::optional<Element> FiniteRing::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Ideal FiniteRing::all() const {
  return Ideal(order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1);
}

void FiniteRing::validate() const {
  const int n = order_;
  if (zero_ == one_) throw RingError("one equals zero");
  for (Element a = 0; a < n; ++a) {
    if (add(a, zero_) != a) throw RingError("zero is not an additive identity");
    if (mul(a, one_) != a || mul(one_, a) != a) throw RingError("identity law fails for " + name(a));
    bool has_neg = false;
    for (Element b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) throw RingError("addition is not commutative");
      if (mul(a, b) != mul(b, a)) throw RingError("multiplication is not commutative");
      if (add(a, b) == zero_) has_neg = true;
    }
    if (!has_neg) throw RingError("element " + name(a) + " has no additive inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) throw RingError("addition is not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw RingError("multiplication is not associative at (" + name(a) + ", " + name(b) +
                          ", " + name(c) + ")");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw RingError("multiplication does not distribute over addition");
      }
}

// Constructors

FiniteRing make_cyclic(int n) { return make_cyclic(n, "Z" + std::to_string(n)); }

FiniteRing make_cyclic(int n, std::string display_name) {
  if (n < 2) throw RingError("Z_n requires n >= 2");
  check_order(n);
  std::vector<std::uint8_t> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<std::uint8_t>((a + b) % n);
      mul[a * n + b] = static_cast<std::uint8_t>((a * b) % n);
    }
  }
  return FiniteRing(n, std::move(add), std::move(mul), 0, 1, std::move(names),
                    RingSpec{CyclicSpec{n}, std::move(display_name)});
}

FiniteRing make_poly_quotient(int n, std::vector<int> modulus) {
  std::string name = n >= 2 ? poly_display(n, modulus) : std::string{};
  return make_poly_quotient(n, std::move(modulus), std::move(name));
}

FiniteRing make_poly_quotient(int n, std::vector<int> modulus, std::string display_name) {
  if (n < 2) throw RingError("coefficient ring Z_n requires n >= 2");
  for (int& c : modulus) c = mod(c, n);
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw RingError("modulus must have degree at least 1");
  if (modulus.back() != 1) throw RingError("modulus is not monic");
  const int degree = static_cast<int>(modulus.size()) - 1;
  long long order = 1;
  for (int i = 0; i < degree; ++i) {
    order *= n;
    if (order > kMaxRingOrder) check_order(order);
  }
  check_order(order);
  const int q = static_cast<int>(order);
  const std::vector<int> radices(degree, n);

  std::vector<std::string> monomials(degree);
  for (int i = 0; i < degree; ++i) monomials[i] = monomial_name(i);

  std::vector<std::vector<int>> coeffs(q);
  std::vector<std::string> names(q);
  for (int e = 0; e < q; ++e) {
    coeffs[e] = decode(e, radices);
    names[e] = linear_name(coeffs[e], monomials);
  }

  std::vector<std::uint8_t> add(q * q), mul(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      std::vector<int> s(degree);
      for (int i = 0; i < degree; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % n;
      add[a * q + b] = static_cast<std::uint8_t>(encode(s, radices));

      std::vector<long long> prod(2 * degree - 1, 0);
      for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j) prod[i + j] += coeffs[a][i] * coeffs[b][j];
      // reduce using x^degree = -(f_0 + ... + f_{d-1} x^{d-1})
      for (int k = static_cast<int>(prod.size()) - 1; k >= degree; --k) {
        long long c = prod[k] % n;
        prod[k] = 0;
        if (c == 0) continue;
        for (int i = 0; i < degree; ++i) prod[k - degree + i] -= c * modulus[i];
      }
      std::vector<int> r(degree);
      for (int i = 0; i < degree; ++i) r[i] = mod(prod[i], n);
      mul[a * q + b] = static_cast<std::uint8_t>(encode(r, radices));
    }

  std::vector<int> one_coeffs(degree, 0);
  one_coeffs[0] = 1;
  FiniteRing ring(q, std::move(add), std::move(mul), 0, encode(one_coeffs, radices),
                  std::move(names), RingSpec{PolyQuotientSpec{n, modulus}, std::move(display_name)});
  return ring;
}

FiniteRing make_structure_ring(StructureSpec spec, std::string display_name) {
  const std::size_t rank = spec.moduli.size();
  if (rank == 0) throw RingError("structure ring needs at least one basis element");
  long long order = 1;
  for (int m : spec.moduli) {
    if (m < 1) throw RingError("moduli must be positive");
    order *= m;
    if (order > kMaxRingOrder) check_order(order);
  }
  check_order(order);
  if (spec.one.size() != rank) throw RingError("declared one has the wrong length");
  if (spec.products.size() != rank) throw RingError("product table has the wrong shape");
  for (std::size_t i = 0; i < rank; ++i) {
    if (spec.products[i].size() != rank) throw RingError("product table has the wrong shape");
    for (std::size_t j = 0; j < rank; ++j) {
      if (spec.products[i][j].size() != rank) throw RingError("product table has the wrong shape");
      if (spec.products[i][j] != spec.products[j][i]) throw RingError("product table is not symmetric");
    }
  }
  if (spec.basis_names.empty()) {
    static const std::array<const char*, 8> defaults = {"1", "x", "y", "z", "u", "v", "w", "t"};
    if (rank > defaults.size()) throw RingError("too many basis elements for default names");
    for (std::size_t i = 0; i < rank; ++i) spec.basis_names.emplace_back(defaults[i]);
  }
  if (spec.basis_names.size() != rank) throw RingError("basis names have the wrong length");

  const int q = static_cast<int>(order);
  const auto& radices = spec.moduli;
  std::vector<std::vector<int>> coeffs(q);
  std::vector<std::string> names(q);
  for (int e = 0; e < q; ++e) {
    coeffs[e] = decode(e, radices);
    names[e] = linear_name(coeffs[e], spec.basis_names);
  }

  std::vector<std::uint8_t> add(q * q), mul(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      std::vector<int> s(rank);
      for (std::size_t i = 0; i < rank; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % radices[i];
      add[a * q + b] = static_cast<std::uint8_t>(encode(s, radices));

      std::vector<long long> p(rank, 0);
      for (std::size_t i = 0; i < rank; ++i) {
        if (coeffs[a][i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j) {
          if (coeffs[b][j] == 0) continue;
          const long long c = static_cast<long long>(coeffs[a][i]) * coeffs[b][j];
          for (std::size_t k = 0; k < rank; ++k) p[k] += c * spec.products[i][j][k];
        }
      }
      std::vector<int> r(rank);
      for (std::size_t k = 0; k < rank; ++k) r[k] = mod(p[k], radices[k]);
      mul[a * q + b] = static_cast<std::uint8_t>(encode(r, radices));
    }

  std::vector<int> one(rank);
  for (std::size_t i = 0; i < rank; ++i) one[i] = mod(spec.one[i], radices[i]);
  const Element one_index = encode(one, radices);
  if (one_index == 0) throw RingError("declared one equals zero");
  if (display_name.empty()) display_name = "structure" + std::to_string(q);
  FiniteRing ring(q, std::move(add), std::move(mul), 0, one_index, std::move(names),
                  RingSpec{std::move(spec), std::move(display_name)});
  ring.validate();
  return ring;
}

FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s) {
  const long long order = static_cast<long long>(r.order()) * s.order();
  check_order(order);
  const int q = static_cast<int>(order);
  const int m = s.order();
  std::vector<std::uint8_t> add(q * q), mul(q * q);
  std::vector<std::string> names(q);
  for (int a = 0; a < q; ++a) {
    std::vector<std::string> parts = product_components(r, a / m);
    for (auto& p : product_components(s, a % m)) parts.push_back(std::move(p));
    names[a] = "(" + join_names(parts, ",") + ")";
    for (int b = 0; b < q; ++b) {
      add[a * q + b] = static_cast<std::uint8_t>(r.add(a / m, b / m) * m + s.add(a % m, b % m));
      mul[a * q + b] = static_cast<std::uint8_t>(r.mul(a / m, b / m) * m + s.mul(a % m, b % m));
    }
  }
  ProductSpec spec;
  spec.factors = product_factors(r.spec());
  for (auto& f : product_factors(s.spec())) spec.factors.push_back(std::move(f));
  std::vector<std::string> factor_names;
  for (const auto& f : spec.factors) factor_names.push_back(f.name);
  std::string display = join_names(factor_names, "x");
  return FiniteRing(q, std::move(add), std::move(mul), r.zero() * m + s.zero(),
                    r.one() * m + s.one(), std::move(names), RingSpec{std::move(spec), std::move(display)});
}

FiniteRing rebuild(const RingSpec& spec) {
  return std::visit(
      [&](const auto& c) -> FiniteRing {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return make_cyclic(c.n, spec.name);
        } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
          return make_poly_quotient(c.n, c.modulus, spec.name);
        } else if constexpr (std::is_same_v<T, StructureSpec>) {
          return make_structure_ring(c, spec.name);
        } else {
          if (c.factors.empty()) throw RingError("empty product");
          FiniteRing acc = rebuild(c.factors.front());
          for (std::size_t i = 1; i < c.factors.size(); ++i) acc = direct_product(acc, rebuild(c.factors[i]));
          return acc;
        }
      },
      spec.construction);
}

// Queries

std::vector<bool> unit_mask(const FiniteRing& r) {
  std::vector<bool> out(r.order(), false);
  for (Element u = 0; u < r.order(); ++u)
    for (Element v = 0; v < r.order(); ++v)
      if (r.mul(u, v) == r.one()) {
        out[u] = true;
        break;
      }
  return out;
}

std::vector<Element> units(const FiniteRing& r) {
  std::vector<Element> out;
  const auto mask = unit_mask(r);
  for (Element e = 0; e < r.order(); ++e)
    if (mask[e]) out.push_back(e);
  return out;
}

Ideal principal_ideal(const FiniteRing& r, Element x) {
  std::uint64_t m = 0;
  for (Element a = 0; a < r.order(); ++a) m |= bit(r.mul(a, x));
  return Ideal(m);
}

Ideal ideal_closure(const FiniteRing& r, std::uint64_t seed) {
  std::uint64_t m = seed | bit(r.zero());
  // multiples first; a sum of multiples is again closed under multiplication
  std::uint64_t multiples = 0;
  for (std::uint64_t s = m; s; s &= s - 1) multiples |= principal_ideal(r, std::countr_zero(s)).mask();
  m |= multiples;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::uint64_t before = m;
    for (std::uint64_t a = before; a; a &= a - 1)
      for (std::uint64_t b = before; b; b &= b - 1)
        m |= bit(r.add(std::countr_zero(a), std::countr_zero(b)));
    grew = m != before;
  }
  return Ideal(m);
}

Ideal ideal_generated_by(const FiniteRing& r, const std::vector<Element>& generators) {
  std::uint64_t seed = 0;
  for (Element g : generators) seed |= bit(g);
  return ideal_closure(r, seed);
}

Ideal ideal_product(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  std::uint64_t seed = 0;
  for (Element a : i.members())
    for (Element b : j.members()) seed |= bit(r.mul(a, b));
  return ideal_closure(r, seed);
}

bool is_ideal(const FiniteRing& r, const Ideal& ideal) {
  if (!ideal.contains(r.zero())) return false;
  for (Element a : ideal.members()) {
    for (Element b : ideal.members())
      if (!ideal.contains(r.add(a, b))) return false;
    for (Element s = 0; s < r.order(); ++s)
      if (!ideal.contains(r.mul(s, a))) return false;
  }
  return true;
}

std::vector<Ideal> all_ideals(const FiniteRing& r) {
  std::vector<Ideal> found;
  std::set<std::uint64_t> seen;
  std::deque<Ideal> queue;
  const Ideal zero = ideal_closure(r, 0);
  queue.push_back(zero);
  seen.insert(zero.mask());
  while (!queue.empty()) {
    Ideal cur = queue.front();
    queue.pop_front();
    found.push_back(cur);
    for (Element e = 0; e < r.order(); ++e) {
      if (cur.contains(e)) continue;
      Ideal next = ideal_closure(r, cur.mask() | bit(e));
      if (seen.insert(next.mask()).second) queue.push_back(next);
    }
  }
  std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
    return std::make_pair(a.size(), a.mask()) < std::make_pair(b.size(), b.mask());
  });
  return found;
}

int characteristic(const FiniteRing& r) {
  int k = 1;
  for (Element acc = r.one(); acc != r.zero(); acc = r.add(acc, r.one())) ++k;
  return k;
}

bool is_field(const FiniteRing& r) {
  return static_cast<int>(units(r).size()) == r.order() - 1;
}

std::optional<Ideal> maximal_ideal(const FiniteRing& r) {
  const auto is_unit = unit_mask(r);
  std::uint64_t m = 0;
  for (Element e = 0; e < r.order(); ++e)
    if (!is_unit[e]) m |= bit(e);
  Ideal candidate(m);
  for (Element a : candidate.members())
    for (Element b : candidate.members())
      if (is_unit[r.add(a, b)]) return std::nullopt;
  return candidate;
}

int residue_field_order(const FiniteRing& r) {
  const auto m = maximal_ideal(r);
  if (!m) throw RingError("ring " + r.display_name() + " is not local");
  return r.order() / m->size();
}

GeneratorCount minimal_generator_count(const FiniteRing& r, const std::vector<Element>& order) {
  const auto m = maximal_ideal(r);
  if (!m) throw RingError("ring " + r.display_name() + " is not local");
  const Ideal m2 = ideal_product(r, *m, *m);
  const int q = r.order() / m->size();
  int ratio = m->size() / m2.size();
  GeneratorCount out;
  while (ratio > 1) {
    ratio /= q;
    ++out.count;
  }

  std::vector<Element> scan = order;
  if (scan.empty()) {
    scan.resize(r.order());
    std::iota(scan.begin(), scan.end(), 0);
  }
  // Pick elements independent modulo M^2 so the witness is minimal for any scan order.
  Ideal generated = ideal_closure(r, 0);
  for (Element e : scan) {
    if (generated == *m) break;
    if (!m->contains(e)) continue;
    const Ideal span = ideal_closure(r, generated.mask() | m2.mask());
    if (span.contains(e)) continue;
    out.witness.push_back(e);
    generated = ideal_generated_by(r, out.witness);
  }
  if (generated != *m || static_cast<int>(out.witness.size()) != out.count)
    throw std::logic_error("generator witness disagrees with the Nakayama count");
  return out;
}

bool is_principal_local(const FiniteRing& r) {
  const auto m = maximal_ideal(r);
  if (!m) throw RingError("ring " + r.display_name() + " is not local");
  for (Element e : m->members())
    if (principal_ideal(r, e) == *m) return true;
  return false;
}

// Isomorphism

namespace {

using Signature = std::array<int, 6>;

std::vector<Signature> element_signatures(const FiniteRing& r) {
  const auto is_unit = unit_mask(r);
  std::vector<Signature> sig(r.order());
  for (Element x = 0; x < r.order(); ++x) {
    int additive_order = 1;
    for (Element acc = x; acc != r.zero(); acc = r.add(acc, x)) ++additive_order;
    int annihilator = 0;
    for (Element a = 0; a < r.order(); ++a)
      if (r.mul(a, x) == r.zero()) ++annihilator;
    int nil_index = 0;
    Element p = x;
    for (int k = 1; k <= r.order(); ++k) {
      if (p == r.zero()) {
        nil_index = k;
        break;
      }
      p = r.mul(p, x);
    }
    const Element sq = r.mul(x, x);
    sig[x] = {additive_order, is_unit[x] ? 1 : 0, principal_ideal(r, x).size(), annihilator, nil_index,
              sq == x ? 1 : 0};
  }
  return sig;
}

std::uint64_t subring_closure(const FiniteRing& r, std::uint64_t seed) {
  std::uint64_t m = seed | bit(r.zero()) | bit(r.one());
  for (;;) {
    const std::uint64_t before = m;
    for (std::uint64_t a = before; a; a &= a - 1)
      for (std::uint64_t b = before; b; b &= b - 1) {
        const Element x = std::countr_zero(a), y = std::countr_zero(b);
        m |= bit(r.add(x, y)) | bit(r.mul(x, y));
      }
    if (m == before) return m;
  }
}

std::vector<Element> ring_generators(const FiniteRing& r) {
  std::vector<Element> gens;
  std::uint64_t closure = subring_closure(r, 0);
  const std::uint64_t full = r.all().mask();
  while (closure != full) {
    Element best = -1;
    int best_size = -1;
    for (Element e = 0; e < r.order(); ++e) {
      if ((closure >> e) & 1U) continue;
      const int size = std::popcount(subring_closure(r, closure | bit(e)));
      if (size > best_size) {
        best_size = size;
        best = e;
      }
    }
    gens.push_back(best);
    closure = subring_closure(r, closure | bit(best));
  }
  return gens;
}

struct PartialMap {
  std::vector<int> fwd;
  std::vector<int> inv;

  bool assign(Element a, Element b) {
    if (fwd[a] == -1) {
      if (inv[b] != -1) return false;
      fwd[a] = b;
      inv[b] = a;
      return true;
    }
    return fwd[a] == b;
  }
};

bool propagate(const FiniteRing& r, const FiniteRing& s, PartialMap& map) {
  for (;;) {
    std::vector<Element> mapped;
    for (Element e = 0; e < r.order(); ++e)
      if (map.fwd[e] != -1) mapped.push_back(e);
    const std::size_t count = mapped.size();
    for (Element a : mapped)
      for (Element b : mapped) {
        if (!map.assign(r.add(a, b), s.add(map.fwd[a], map.fwd[b]))) return false;
        if (!map.assign(r.mul(a, b), s.mul(map.fwd[a], map.fwd[b]))) return false;
      }
    std::size_t now = 0;
    for (int v : map.fwd) now += v != -1;
    if (now == count) return true;
  }
}

bool extend(const FiniteRing& r, const FiniteRing& s, const std::vector<Element>& gens, std::size_t depth,
            const std::vector<Signature>& sig_r, const std::vector<Signature>& sig_s, PartialMap& map) {
  if (depth == gens.size()) return true;
  const Element g = gens[depth];
  if (map.fwd[g] != -1) return extend(r, s, gens, depth + 1, sig_r, sig_s, map);
  for (Element t = 0; t < s.order(); ++t) {
    if (map.inv[t] != -1 || sig_s[t] != sig_r[g]) continue;
    PartialMap trial = map;
    trial.fwd[g] = t;
    trial.inv[t] = g;
    if (!propagate(r, s, trial)) continue;
    if (extend(r, s, gens, depth + 1, sig_r, sig_s, trial)) {
      map = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Element>> ring_isomorphism(const FiniteRing& r, const FiniteRing& s) {
  if (r.order() > kMaxIsomorphismOrder || s.order() > kMaxIsomorphismOrder)
    throw RingError("ring isomorphism search is capped at order " + std::to_string(kMaxIsomorphismOrder));
  if (r.order() != s.order() || characteristic(r) != characteristic(s) || units(r).size() != units(s).size())
    return std::nullopt;
  const auto sig_r = element_signatures(r);
  const auto sig_s = element_signatures(s);
  auto sorted_r = sig_r, sorted_s = sig_s;
  std::sort(sorted_r.begin(), sorted_r.end());
  std::sort(sorted_s.begin(), sorted_s.end());
  if (sorted_r != sorted_s) return std::nullopt;

  PartialMap map{std::vector<int>(r.order(), -1), std::vector<int>(s.order(), -1)};
  map.assign(r.zero(), s.zero());
  if (!map.assign(r.one(), s.one()) || !propagate(r, s, map)) return std::nullopt;
  if (!extend(r, s, ring_generators(r), 0, sig_r, sig_s, map)) return std::nullopt;

  for (Element a = 0; a < r.order(); ++a)
    for (Element b = 0; b < r.order(); ++b)
      if (map.fwd[r.add(a, b)] != s.add(map.fwd[a], map.fwd[b]) ||
          map.fwd[r.mul(a, b)] != s.mul(map.fwd[a], map.fwd[b]))
        return std::nullopt;
  return map.fwd;
}

bool is_ring_isomorphic(const FiniteRing& r, const FiniteRing& s) { return ring_isomorphism(r, s).has_value(); }

std::string table_digest(const FiniteRing& r) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(r.order()));
  for (Element a = 0; a < r.order(); ++a)
    for (Element b = 0; b < r.order(); ++b) {
      mix(static_cast<std::uint64_t>(r.add(a, b)));
      mix(static_cast<std::uint64_t>(r.mul(a, b)));
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace uirg

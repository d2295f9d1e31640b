#include "uirg/ring_parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>

#include "uirg/catalog.hpp"

namespace uirg {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime-power factorization as (p, p^k) pairs.
std::vector<std::pair<int, int>> prime_powers(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    int q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  return out;
}

// Monomial x^i y^j -> coefficient reduced mod n, zero coefficients dropped.
using Polynomial = std::map<std::pair<int, int>, int>;

struct GaloisModulus {
  int q;
  int p;
  std::vector<int> modulus;
};

const std::vector<GaloisModulus>& galois_moduli() {
  static const std::vector<GaloisModulus> table = {
      {4, 2, {1, 1, 1}},       {8, 2, {1, 1, 0, 1}},       {9, 3, {1, 0, 1}},
      {16, 2, {1, 1, 0, 0, 1}}, {25, 5, {2, 1, 1}},        {27, 3, {1, 2, 0, 1}},
      {32, 2, {1, 0, 1, 0, 0, 1}}, {49, 7, {1, 0, 1}},     {64, 2, {1, 1, 0, 0, 0, 0, 1}},
  };
  return table;
}

FiniteRing factor_ring(const FiniteRing& r, Element e) {
  std::vector<Element> elems;
  for (Element a = 0; a < r.order(); ++a) elems.push_back(r.mul(a, e));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int q = static_cast<int>(elems.size());
  std::vector<int> pos(r.order(), -1);
  for (int i = 0; i < q; ++i) pos[elems[i]] = i;
  std::vector<std::uint8_t> add(q * q), mul(q * q);
  std::vector<std::string> names;
  for (int i = 0; i < q; ++i) {
    names.push_back(r.name(elems[i]));
    for (int j = 0; j < q; ++j) {
      add[i * q + j] = static_cast<std::uint8_t>(pos[r.add(elems[i], elems[j])]);
      mul[i * q + j] = static_cast<std::uint8_t>(pos[r.mul(elems[i], elems[j])]);
    }
  }
  return FiniteRing(q, std::move(add), std::move(mul), pos[r.zero()], pos[e], std::move(names),
                    RingSpec{CyclicSpec{0}, r.display_name() + "*" + r.name(e)});
}

void sort_by_table(std::vector<FiniteRing>& factors) {
  std::stable_sort(factors.begin(), factors.end(), [](const FiniteRing& a, const FiniteRing& b) {
    const auto key = [](const FiniteRing& f) {
      const int i = local_table_index(f.display_name());
      return std::make_pair(i < 0 ? std::numeric_limits<int>::max() : i, f.order());
    };
    return key(a) < key(b);
  });
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ParsedRing parse() {
    skip_space();
    std::vector<ParsedRing> atoms;
    atoms.push_back(atom());
    skip_space();
    while (pos_ < s_.size()) {
      if (s_[pos_] != 'x') fail("expected 'x' between factors or end of input");
      ++pos_;
      skip_space();
      atoms.push_back(atom());
      skip_space();
    }
    std::vector<FiniteRing> factors;
    for (auto& a : atoms)
      for (auto& f : a.factors) factors.push_back(std::move(f));
    sort_by_table(factors);
    try {
      FiniteRing ring = atoms.front().ring;
      for (std::size_t i = 1; i < atoms.size(); ++i) ring = direct_product(ring, atoms[i].ring);
      return ParsedRing{std::move(ring), std::move(factors)};
    } catch (const RingError& e) {
      throw ParseError(0, e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const std::string& token) {
    if (s_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& token) {
    if (!accept(token)) fail("expected '" + token + "'");
  }

  int integer() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) {
        pos_ = start;
        fail("integer too large");
      }
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(v);
  }

  ParsedRing atom() {
    const std::size_t start = pos_;
    try {
      if (accept("GF(")) {
        const int q = integer();
        expect(")");
        return galois_field(q, start);
      }
      if (!accept("Z")) fail("expected 'Z' or 'GF('");
      const std::size_t n_pos = pos_;
      const int n = integer();
      if (n < 2) throw ParseError(n_pos, "Z_n requires n >= 2");
      if (pos_ < s_.size() && s_[pos_] == '[') return quotient(n, start);
      return cyclic(n);
    } catch (const RingError& e) {
      throw ParseError(start, e.what());
    }
  }

  ParsedRing cyclic(int n) {
    FiniteRing ring = make_cyclic(n);
    const auto pp = prime_powers(n);
    if (pp.size() == 1) return {ring, {ring}};
    std::vector<FiniteRing> factors;
    for (auto [p, q] : pp) factors.push_back(make_cyclic(q));
    return {std::move(ring), std::move(factors)};
  }

  ParsedRing galois_field(int q, std::size_t start) {
    const std::string name = "GF(" + std::to_string(q) + ")";
    if (is_prime(q)) {
      FiniteRing f = make_cyclic(q, name);
      return {f, {f}};
    }
    for (const auto& g : galois_moduli())
      if (g.q == q) {
        FiniteRing f = make_poly_quotient(g.p, g.modulus, name);
        return {f, {f}};
      }
    throw ParseError(start, "unsupported field order " + std::to_string(q));
  }

  ParsedRing quotient(int n, std::size_t start) {
    bool two_vars = false;
    if (accept("[x]/(")) {
    } else if (accept("[x,y]/(")) {
      two_vars = true;
    } else {
      fail("expected '[x]/(' or '[x,y]/('");
    }
    const std::size_t list_pos = pos_;
    std::vector<Polynomial> gens;
    gens.push_back(polynomial(n, two_vars));
    while (accept(",")) gens.push_back(polynomial(n, two_vars));
    expect(")");
    const std::string text = s_.substr(start, pos_ - start);
    std::erase_if(gens, [](const Polynomial& p) { return p.empty(); });
    if (gens.empty()) throw ParseError(list_pos, "the zero ideal gives an infinite ring");

    if (auto known = known_presentation(n, two_vars, gens, text)) return {*known, {*known}};
    if (two_vars || gens.size() > 1) throw ParseError(start, "unsupported presentation " + text);

    const Polynomial& f = gens.front();
    int degree = 0;
    for (const auto& [mono, c] : f) degree = std::max(degree, mono.first);
    if (degree == 0) throw ParseError(list_pos, "modulus must have degree at least 1");
    if (f.at({degree, 0}) != 1) throw ParseError(list_pos, "modulus is not monic");
    std::vector<int> coeffs(degree + 1, 0);
    for (const auto& [mono, c] : f) coeffs[mono.first] = c;
    FiniteRing ring = make_poly_quotient(n, coeffs, text);
    std::vector<FiniteRing> factors = local_factors(ring);
    return {std::move(ring), std::move(factors)};
  }

  std::optional<FiniteRing> known_presentation(int n, bool two_vars, std::vector<Polynomial> gens,
                                               const std::string& text) const {
    static const std::vector<std::string> names = {"Z4[x]/(2x,x^2)",       "Z4[x]/(2x,x^2-2)",
                                                   "Z8[x]/(2x,x^2)",       "Z9[x]/(3x,x^2)",
                                                   "Z2[x,y]/(x^2,xy,y^2)", "Z2[x,y]/(x^2,y^2)"};
    std::sort(gens.begin(), gens.end());
    for (const auto& name : names) {
      Parser inner(name);
      inner.expect("Z");
      const int m = inner.integer();
      const bool inner_two = inner.accept("[x,y]/(");
      if (!inner_two) inner.expect("[x]/(");
      if (m != n || inner_two != two_vars) continue;
      std::vector<Polynomial> table_gens{inner.polynomial(m, inner_two)};
      while (inner.accept(",")) table_gens.push_back(inner.polynomial(m, inner_two));
      std::sort(table_gens.begin(), table_gens.end());
      if (table_gens != gens) continue;
      RingSpec spec = local_ring_table()[local_table_index(name)].spec();
      spec.name = text;
      return rebuild(spec);
    }
    return std::nullopt;
  }

  Polynomial polynomial(int n, bool two_vars) {
    std::map<std::pair<int, int>, long long> acc;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (accept("+")) {
        if (first) fail("unexpected '+'");
      } else if (accept("-")) {
        sign = -1;
      } else if (!first) {
        break;
      }
      first = false;
      const std::size_t term_pos = pos_;
      long long coeff = 1;
      bool has_coeff = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coeff = integer();
        has_coeff = true;
      }
      int ex = 0, ey = 0;
      bool has_var = false;
      while (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y')) {
        const char var = s_[pos_];
        if (var == 'y' && !two_vars) fail("variable y is not declared");
        ++pos_;
        int power = 1;
        if (accept("^")) power = integer();
        (var == 'x' ? ex : ey) += power;
        has_var = true;
      }
      if (!has_coeff && !has_var) {
        pos_ = term_pos;
        fail("expected a polynomial term");
      }
      acc[{ex, ey}] += sign * coeff;
    }
    Polynomial out;
    for (const auto& [mono, c] : acc) {
      const int r = static_cast<int>(((c % n) + n) % n);
      if (r) out[mono] = r;
    }
    return out;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<FiniteRing> local_factors(const FiniteRing& r) {
  if (is_local(r)) return {r};
  std::vector<Element> idempotents;
  for (Element e = 0; e < r.order(); ++e)
    if (e != r.zero() && r.mul(e, e) == e) idempotents.push_back(e);
  std::vector<FiniteRing> out;
  for (Element e : idempotents) {
    const bool primitive = std::none_of(idempotents.begin(), idempotents.end(),
                                        [&](Element f) { return f != e && r.mul(f, e) == f; });
    if (!primitive) continue;
    const FiniteRing part = factor_ring(r, e);
    std::optional<FiniteRing> match;
    for (const auto& t : local_ring_table())
      if (t.order() == part.order() && is_ring_isomorphic(t, part)) {
        match = t;
        break;
      }
    if (!match) throw RingError("cannot match a local factor of order " + std::to_string(part.order()) +
                                " of " + r.display_name() + " against the local table");
    out.push_back(*match);
  }
  sort_by_table(out);
  return out;
}

ParsedRing parse_ring_spec(const std::string& text) { return Parser(text).parse(); }

}  // namespace uirg

#include "zdrlab/ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zdrlab/catalog.hpp"
#include "zdrlab/errors.hpp"

namespace zdrlab {

// ---------------------------------------------------------------------------
// Number theory
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, k};
}

namespace {

bool has_root_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<std::uint32_t> field_modulus(std::uint32_t p, unsigned k) {
  if (!is_prime(p) || k < 1 || k > 3) throw InvalidSpecError("field_modulus: need prime p and 1 <= k <= 3");
  if (k == 1) return {0, 1};
  std::vector<std::uint32_t> poly;
  if (p == 2 && k == 2) poly = {1, 1, 1};
  else if (p == 2 && k == 3) poly = {1, 1, 0, 1};
  else if (p == 3 && k == 2) poly = {1, 0, 1};
  else if (p == 3 && k == 3) poly = {1, 2, 0, 1};
  else if (p == 5 && k == 2) poly = {2, 0, 1};
  else if (p == 7 && k == 2) poly = {1, 0, 1};

  // Degree 2 and 3 polynomials are irreducible exactly when they have no root.
  if (!poly.empty()) {
    if (has_root_mod_p(poly, p))
      throw std::logic_error("field_modulus: tabulated polynomial is reducible");
    return poly;
  }
  // Outside the table: lexicographically least monic irreducible.
  std::uint64_t combos = 1;
  for (unsigned i = 0; i < k; ++i) combos *= p;
  for (std::uint64_t code = 0; code < combos; ++code) {
    poly.assign(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      poly[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    poly[k] = 1;
    if (!has_root_mod_p(poly, p)) return poly;
  }
  throw std::logic_error("field_modulus: no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

std::uint64_t StructureConstants::order() const noexcept {
  std::uint64_t o = 1;
  for (auto m : moduli) o *= m;
  return o;
}

namespace {

using Coeffs = std::vector<std::uint64_t>;

Coeffs multiply(const StructureConstants& sc, const Coeffs& a, const Coeffs& b) {
  const std::size_t d = sc.dimension();
  Coeffs out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const auto& t = sc.product(i, j);
      std::uint64_t s = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k) out[k] = (out[k] + s % sc.moduli[k] * t[k]) % sc.moduli[k];
    }
  }
  return out;
}

Coeffs unit_vector(std::size_t d, std::size_t i) {
  Coeffs v(d, 0);
  v[i] = 1;
  return v;
}

std::string describe_basis_product(const StructureConstants& sc, std::size_t i, std::size_t j) {
  auto name = [&](std::size_t k) { return k == 0 ? std::string("1") : sc.basis_labels[k]; };
  return name(i) + "*" + name(j);
}

}  // namespace

std::optional<std::string> check_structure_constants(const StructureConstants& sc) {
  const std::size_t d = sc.dimension();
  if (d == 0) return "empty basis";
  if (sc.basis_labels.size() != d) return "basis label count does not match moduli";
  if (sc.products.size() != d * d) return "product table has wrong size";
  for (auto m : sc.moduli)
    if (m < 2) return "additive orders must be >= 2";
  // The unity b_0 generates a cyclic subgroup of order m_0 (the characteristic);
  // every other additive order must divide it.
  for (std::size_t i = 1; i < d; ++i)
    if (sc.moduli[0] % sc.moduli[i] != 0) return "additive order of " + sc.basis_labels[i] + " does not divide the characteristic";

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& t = sc.product(i, j);
      if (t.size() != d) return "product " + describe_basis_product(sc, i, j) + " has wrong length";
      for (std::size_t k = 0; k < d; ++k) {
        if (t[k] >= sc.moduli[k]) return "coefficient out of range in " + describe_basis_product(sc, i, j);
        // m_i * (b_i b_j) and m_j * (b_i b_j) must vanish for the product to be
        // well defined on Z_{m_i} x Z_{m_j}.
        if ((static_cast<std::uint64_t>(sc.moduli[i]) * t[k]) % sc.moduli[k] != 0 ||
            (static_cast<std::uint64_t>(sc.moduli[j]) * t[k]) % sc.moduli[k] != 0)
          return "product " + describe_basis_product(sc, i, j) + " is not well defined modulo the additive orders";
      }
      if (t != sc.product(j, i)) return "product " + describe_basis_product(sc, i, j) + " is not commutative";
    }
    Coeffs e = unit_vector(d, i);
    if (multiply(sc, unit_vector(d, 0), e) != e) return "b_0 is not a unity for " + sc.basis_labels[i];
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        Coeffs bi = unit_vector(d, i), bj = unit_vector(d, j), bl = unit_vector(d, l);
        if (multiply(sc, multiply(sc, bi, bj), bl) != multiply(sc, bi, multiply(sc, bj, bl)))
          return "associativity fails on (" + describe_basis_product(sc, i, j) + ")*" +
                 (l == 0 ? std::string("1") : sc.basis_labels[l]);
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FiniteRing
// ---------------------------------------------------------------------------

FiniteRing::FiniteRing(RingSpec spec, std::size_t order, Element one, std::vector<std::uint16_t> add,
                       std::vector<std::uint16_t> mul, std::vector<std::string> labels)
    : spec_(std::move(spec)),
      order_(order),
      one_(one),
      add_(std::move(add)),
      mul_(std::move(mul)),
      labels_(std::move(labels)) {
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_ || labels_.size() != order_)
    throw std::invalid_argument("FiniteRing: table sizes do not match the order");
}

Element FiniteRing::neg(Element a) const {
  for (Element b = 0; b < order_; ++b)
    if (add(a, b) == 0) return b;
  throw std::logic_error("FiniteRing::neg: no additive inverse");
}

std::optional<Element> FiniteRing::find(std::string_view label) const {
  for (Element e = 0; e < order_; ++e)
    if (labels_[e] == label) return e;
  return std::nullopt;
}

namespace {

constexpr std::uint64_t kTableLimit = 65535;

std::string render(const StructureConstants& sc, const Coeffs& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0)
      out += std::to_string(c[i]);
    else if (c[i] == 1)
      out += sc.basis_labels[i];
    else
      out += std::to_string(c[i]) + sc.basis_labels[i];
  }
  return out.empty() ? "0" : out;
}

FiniteRing build_from_structure(const RingSpec& spec, const StructureConstants& sc) {
  const std::size_t d = sc.dimension();
  const std::size_t order = static_cast<std::size_t>(sc.order());

  std::vector<std::uint64_t> weight(d, 1);
  for (std::size_t i = 1; i < d; ++i) weight[i] = weight[i - 1] * sc.moduli[i - 1];

  std::vector<Coeffs> coords(order, Coeffs(d, 0));
  std::vector<std::string> labels(order);
  for (std::size_t e = 0; e < order; ++e) {
    std::size_t rest = e;
    for (std::size_t i = 0; i < d; ++i) {
      coords[e][i] = rest % sc.moduli[i];
      rest /= sc.moduli[i];
    }
    labels[e] = render(sc, coords[e]);
  }
  auto encode = [&](const Coeffs& c) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < d; ++i) idx += c[i] * weight[i];
    return static_cast<std::uint16_t>(idx);
  };

  std::vector<std::uint16_t> add(order * order), mul(order * order);
  Coeffs tmp(d);
  for (std::size_t a = 0; a < order; ++a) {
    // a * b_j for each basis element, so a * b is a linear combination of rows.
    std::vector<Coeffs> a_times_basis(d, Coeffs(d, 0));
    for (std::size_t j = 0; j < d; ++j) a_times_basis[j] = multiply(sc, coords[a], unit_vector(d, j));
    for (std::size_t b = a; b < order; ++b) {
      for (std::size_t k = 0; k < d; ++k) tmp[k] = (coords[a][k] + coords[b][k]) % sc.moduli[k];
      add[a * order + b] = add[b * order + a] = encode(tmp);
      std::fill(tmp.begin(), tmp.end(), 0);
      for (std::size_t j = 0; j < d; ++j) {
        if (coords[b][j] == 0) continue;
        for (std::size_t k = 0; k < d; ++k)
          tmp[k] = (tmp[k] + coords[b][j] * a_times_basis[j][k]) % sc.moduli[k];
      }
      mul[a * order + b] = mul[b * order + a] = encode(tmp);
    }
  }
  return FiniteRing(spec, order, /*one=*/1, std::move(add), std::move(mul), std::move(labels));
}

StructureConstants integers_mod(std::uint32_t n) {
  StructureConstants sc;
  sc.basis_labels = {""};
  sc.moduli = {n};
  sc.products = {{1 % n}};
  return sc;
}

StructureConstants gaussian_integers_mod(std::uint32_t n) {
  AlgebraBuilder b({"i"}, {n, n});
  b.set("i", "i", {{"", n - 1}});
  return b.build();
}

StructureConstants galois_field(std::uint32_t p, unsigned k) {
  if (k == 1) return integers_mod(p);
  auto f = field_modulus(p, k);
  // x^e mod f as a coefficient vector of length k.
  auto power = [&](unsigned e) {
    std::vector<std::uint64_t> v(k, 0);
    v[0] = 1;
    for (unsigned step = 0; step < e; ++step) {
      std::uint64_t carry = v[k - 1];
      for (unsigned i = k - 1; i > 0; --i) v[i] = v[i - 1];
      v[0] = 0;
      for (unsigned i = 0; i < k; ++i) v[i] = (v[i] + (p - f[i]) % p * carry) % p;
    }
    return v;
  };
  StructureConstants sc;
  sc.basis_labels = {"", "x", "x^2"};
  sc.basis_labels.resize(k);
  sc.moduli.assign(k, p);
  sc.products.assign(static_cast<std::size_t>(k) * k, {});
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) {
      auto v = power(i + j);
      sc.products[i * k + j].assign(v.begin(), v.end());
    }
  return sc;
}

FiniteRing build_product(const RingSpec& spec, const FiniteRing& left, const FiniteRing& right) {
  const std::size_t o1 = left.order(), o2 = right.order();
  const std::size_t order = o1 * o2;
  std::vector<std::uint16_t> add(order * order), mul(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    const Element a1 = static_cast<Element>(a % o1), a2 = static_cast<Element>(a / o1);
    labels[a] = "(" + left.label(a1) + "," + right.label(a2) + ")";
    for (std::size_t b = 0; b < order; ++b) {
      const Element b1 = static_cast<Element>(b % o1), b2 = static_cast<Element>(b / o1);
      add[a * order + b] = static_cast<std::uint16_t>(left.add(a1, b1) + o1 * right.add(a2, b2));
      mul[a * order + b] = static_cast<std::uint16_t>(left.mul(a1, b1) + o1 * right.mul(a2, b2));
    }
  }
  const Element one = static_cast<Element>(left.one() + o1 * right.one());
  return FiniteRing(spec, order, one, std::move(add), std::move(mul), std::move(labels));
}

FiniteRing build_impl(const RingSpec& spec, const Catalog& catalog) {
  switch (spec.family) {
    case RingFamily::kZn:
      if (spec.n < 2) throw InvalidSpecError("Zn modulus must be >= 2");
      return build_from_structure(spec, integers_mod(static_cast<std::uint32_t>(spec.n)));
    case RingFamily::kZnGauss:
      if (spec.n < 2) throw InvalidSpecError("Zni modulus must be >= 2");
      return build_from_structure(spec, gaussian_integers_mod(static_cast<std::uint32_t>(spec.n)));
    case RingFamily::kGF: {
      auto pp = as_prime_power(spec.n);
      if (!pp || pp->exponent > 3) throw InvalidSpecError("GF order must be p^k with k <= 3");
      return build_from_structure(spec, galois_field(static_cast<std::uint32_t>(pp->prime), pp->exponent));
    }
    case RingFamily::kProduct: {
      if (spec.factors.size() != 2) throw InvalidSpecError("product spec needs exactly two factors");
      FiniteRing left = build_impl(spec.factors[0], catalog);
      FiniteRing right = build_impl(spec.factors[1], catalog);
      return build_product(spec, left, right);
    }
    case RingFamily::kCatalog: {
      auto entry = catalog.find(spec.catalog_id);
      if (!entry) throw InvalidSpecError("unknown catalog id '" + spec.catalog_id + "'");
      if (auto problem = check_structure_constants(entry->algebra))
        throw CatalogValidationError("catalog entry " + entry->id + ": " + *problem);
      FiniteRing ring = build_from_structure(spec, entry->algebra);
      if (ring.order() <= 256) {
        if (auto problem = check_ring_axioms(ring))
          throw CatalogValidationError("catalog entry " + entry->id + ": " + *problem);
      }
      return ring;
    }
  }
  throw InvalidSpecError("unknown ring family");
}

}  // namespace

FiniteRing build_ring(const RingSpec& spec, const BuildOptions& options) {
  const Catalog& catalog = options.catalog ? *options.catalog : Catalog::builtin();
  const std::uint64_t cap = std::min(options.max_order, kTableLimit);
  const std::uint64_t order = spec_order(spec, catalog);
  if (order > cap)
    throw OrderCapExceeded("ring " + to_string(spec) + " has order " + std::to_string(order) +
                           ", above the cap of " + std::to_string(cap));
  return build_impl(spec, catalog);
}

FiniteRing build_ring(std::string_view spec_text, const BuildOptions& options) {
  const Catalog& catalog = options.catalog ? *options.catalog : Catalog::builtin();
  return build_ring(parse_ring_spec(spec_text, catalog), options);
}

std::optional<std::string> check_ring_axioms(const FiniteRing& r) {
  const Element n = static_cast<Element>(r.order());
  auto lbl = [&](Element e) { return r.label(e); };
  for (Element a = 0; a < n; ++a) {
    if (r.add(a, 0) != a) return "0 is not an additive identity for " + lbl(a);
    if (r.mul(a, r.one()) != a) return "unity is not a multiplicative identity for " + lbl(a);
    bool has_inverse = false;
    for (Element b = 0; b < n; ++b) {
      if (r.add(a, b) == 0) has_inverse = true;
      if (r.add(a, b) != r.add(b, a)) return "addition not commutative on " + lbl(a) + ", " + lbl(b);
      if (r.mul(a, b) != r.mul(b, a)) return "multiplication not commutative on " + lbl(a) + ", " + lbl(b);
    }
    if (!has_inverse) return "no additive inverse for " + lbl(a);
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab_sum = r.add(a, b), ab_prod = r.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c)))
          return "addition not associative on " + lbl(a) + ", " + lbl(b) + ", " + lbl(c);
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c)))
          return "multiplication not associative on " + lbl(a) + ", " + lbl(b) + ", " + lbl(c);
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c)))
          return "distributivity fails on " + lbl(a) + ", " + lbl(b) + ", " + lbl(c);
      }
    }
  return std::nullopt;
}

ZeroDivisorSet zero_divisors(const FiniteRing& ring) {
  ZeroDivisorSet z;
  const Element n = static_cast<Element>(ring.order());
  for (Element x = 1; x < n; ++x) {
    auto row = ring.mul_row(x);
    for (Element y = 1; y < n; ++y)
      if (row[y] == 0) {
        z.members.push_back(x);
        break;
      }
  }
  return z;
}

std::vector<Element> annihilator(const FiniteRing& ring, Element x) {
  if (x >= ring.order()) throw std::out_of_range("annihilator: element out of range");
  std::vector<Element> out;
  auto row = ring.mul_row(x);
  for (Element y = 0; y < ring.order(); ++y)
    if (row[y] == 0) out.push_back(y);
  return out;
}

std::optional<std::size_t> nilpotency_index(const FiniteRing& ring, Element x) {
  if (x >= ring.order()) throw std::out_of_range("nilpotency_index: element out of range");
  Element power = x;
  for (std::size_t m = 1; m <= ring.order(); ++m) {
    if (power == 0) return m;
    power = ring.mul(power, x);
  }
  return std::nullopt;
}

RingProps ring_properties(const FiniteRing& ring) {
  RingProps p;
  const Element n = static_cast<Element>(ring.order());
  std::vector<bool> is_unit(n, false);
  for (Element x = 0; x < n; ++x) {
    auto row = ring.mul_row(x);
    for (Element y = 0; y < n; ++y)
      if (row[y] == ring.one()) {
        is_unit[x] = true;
        break;
      }
    if (is_unit[x]) p.units.push_back(x);
    if (nilpotency_index(ring, x)) p.nilpotents.push_back(x);
  }
  p.is_integral_domain = zero_divisors(ring).empty();
  p.is_field = p.units.size() + 1 == n;
  p.is_reduced = p.nilpotents.size() == 1;

  p.is_local = true;
  std::vector<Element> non_units;
  for (Element x = 0; x < n; ++x)
    if (!is_unit[x]) non_units.push_back(x);
  for (Element a : non_units) {
    for (Element b : non_units)
      if (is_unit[ring.add(a, b)]) {
        p.is_local = false;
        break;
      }
    if (!p.is_local) break;
  }
  return p;
}

}  // namespace zdrlab

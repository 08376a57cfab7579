#pragma once

// Finite commutative rings with unity: symbolic specs, concrete tables, and
// the zero-divisor / annihilator / predicate queries built on top of them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zdrlab {

enum class RingFamily { kZn, kZnGauss, kGF, kProduct, kCatalog };

/// Symbolic description of a ring. Grammar:
///
///   spec := "Zn:" int | "Zni:" int | "GF:" int | "prod:(" spec "," spec ")" | "cat:" id
///
/// For GF the integer is the field order q = p^k (k <= 3).
struct RingSpec {
  RingFamily family = RingFamily::kZn;
  std::uint64_t n = 0;
  std::vector<RingSpec> factors;
  std::string catalog_id;

  static RingSpec zn(std::uint64_t modulus);
  static RingSpec gaussian(std::uint64_t modulus);
  static RingSpec gf(std::uint64_t order);
  static RingSpec product(RingSpec left, RingSpec right);
  static RingSpec catalog(std::string id);

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

class Catalog;

/// Parses and validates. Throws SpecParseError / InvalidSpecError.
RingSpec parse_ring_spec(std::string_view text);
RingSpec parse_ring_spec(std::string_view text, const Catalog& catalog);

/// Canonical printer; parse_ring_spec(to_string(s)) == s.
std::string to_string(const RingSpec& spec);

/// Number of elements the spec describes, saturating at UINT64_MAX.
std::uint64_t spec_order(const RingSpec& spec);
std::uint64_t spec_order(const RingSpec& spec, const Catalog& catalog);

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

/// A ring presented as the additive group Z_{m_0} x ... x Z_{m_{d-1}} over a
/// basis b_0 = 1, b_1, ..., with bilinear products b_i * b_j given by
/// coefficient vectors. Used for Zn, Zn[i], GF(p^k) and the catalog.
struct StructureConstants {
  std::vector<std::string> basis_labels;        // basis_labels[0] is the unity ("")
  std::vector<std::uint32_t> moduli;            // additive order of each basis element
  std::vector<std::vector<std::uint32_t>> products;  // products[i * dim + j] = coefficients of b_i b_j

  std::size_t dimension() const noexcept { return moduli.size(); }
  std::uint64_t order() const noexcept;
  const std::vector<std::uint32_t>& product(std::size_t i, std::size_t j) const {
    return products[i * dimension() + j];
  }
};

/// Checks that the structure constants define a commutative ring with b_0 as
/// unity: products are well defined modulo the additive orders, commutative
/// and associative on basis triples. Returns a description of the first
/// violation, or nullopt.
std::optional<std::string> check_structure_constants(const StructureConstants& sc);

// ---------------------------------------------------------------------------
// FiniteRing
// ---------------------------------------------------------------------------

using Element = std::uint32_t;

/// Immutable ring with materialized addition and multiplication tables.
/// Element 0 is the additive identity.
class FiniteRing {
 public:
  FiniteRing(RingSpec spec, std::size_t order, Element one, std::vector<std::uint16_t> add,
             std::vector<std::uint16_t> mul, std::vector<std::string> labels);

  const RingSpec& spec() const noexcept { return spec_; }
  std::size_t order() const noexcept { return order_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return one_; }

  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element neg(Element a) const;

  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;

  /// Row of the multiplication table for `a`.
  std::span<const std::uint16_t> mul_row(Element a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

 private:
  RingSpec spec_;
  std::size_t order_;
  Element one_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::string> labels_;
};

struct BuildOptions {
  std::uint64_t max_order = 4096;
  const Catalog* catalog = nullptr;  // nullptr selects Catalog::builtin()
};

/// Throws OrderCapExceeded, InvalidSpecError or CatalogValidationError.
FiniteRing build_ring(const RingSpec& spec, const BuildOptions& options = {});
FiniteRing build_ring(std::string_view spec_text, const BuildOptions& options = {});

/// Exhaustive check of the commutative ring axioms over all triples.
/// Returns the first violation found, or nullopt.
std::optional<std::string> check_ring_axioms(const FiniteRing& ring);

struct ZeroDivisorSet {
  std::vector<Element> members;  // ascending element index

  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
};

ZeroDivisorSet zero_divisors(const FiniteRing& ring);

/// ann(x) = { y : x y = 0 }, ascending. Throws std::out_of_range.
std::vector<Element> annihilator(const FiniteRing& ring, Element x);

struct RingProps {
  bool is_field = false;
  bool is_integral_domain = false;
  bool is_local = false;
  bool is_reduced = false;
  std::vector<Element> nilpotents;
  std::vector<Element> units;
};

RingProps ring_properties(const FiniteRing& ring);

/// Nilpotency index of x (smallest m >= 1 with x^m = 0), or nullopt.
std::optional<std::size_t> nilpotency_index(const FiniteRing& ring, Element x);

// ---------------------------------------------------------------------------
// Small number theory helpers shared by the ring builders and the verifier.
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n);

/// q = p^k with p prime, k >= 1; nullopt otherwise.
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Monic irreducible polynomial of degree k over Z_p used for GF(p^k),
/// coefficients low to high (size k + 1, last entry 1).
std::vector<std::uint32_t> field_modulus(std::uint32_t p, unsigned k);

}  // namespace zdrlab

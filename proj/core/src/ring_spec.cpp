#include <cctype>
#include <limits>
#include <string>

#include "zdrlab/catalog.hpp"
#include "zdrlab/errors.hpp"
#include "zdrlab/ring.hpp"

namespace zdrlab {

RingSpec RingSpec::zn(std::uint64_t modulus) {
  RingSpec s;
  s.family = RingFamily::kZn;
  s.n = modulus;
  return s;
}

RingSpec RingSpec::gaussian(std::uint64_t modulus) {
  RingSpec s;
  s.family = RingFamily::kZnGauss;
  s.n = modulus;
  return s;
}

RingSpec RingSpec::gf(std::uint64_t order) {
  RingSpec s;
  s.family = RingFamily::kGF;
  s.n = order;
  return s;
}

RingSpec RingSpec::product(RingSpec left, RingSpec right) {
  RingSpec s;
  s.family = RingFamily::kProduct;
  s.factors.push_back(std::move(left));
  s.factors.push_back(std::move(right));
  return s;
}

RingSpec RingSpec::catalog(std::string id) {
  RingSpec s;
  s.family = RingFamily::kCatalog;
  s.catalog_id = std::move(id);
  return s;
}

namespace {

constexpr std::uint64_t kMaxModulus = 1'000'000'000ULL;

bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '+' ||
         c == '-' || c == '^' || c == ':';
}

class Parser {
 public:
  Parser(std::string_view text, const Catalog& catalog) : text_(text), catalog_(catalog) {}

  RingSpec parse_all() {
    RingSpec s = parse();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SpecParseError(pos_, message); }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t parse_int() {
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > kMaxModulus) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return value;
  }

  RingSpec parse() {
    std::size_t start = pos_;
    if (consume("Zni:")) {
      auto n = parse_int();
      if (n < 2) throw InvalidSpecError("Zni modulus must be >= 2");
      return RingSpec::gaussian(n);
    }
    if (consume("Zn:")) {
      auto n = parse_int();
      if (n < 2) throw InvalidSpecError("Zn modulus must be >= 2");
      return RingSpec::zn(n);
    }
    if (consume("GF:")) {
      auto q = parse_int();
      auto pp = as_prime_power(q);
      if (!pp) throw InvalidSpecError("GF order " + std::to_string(q) + " is not a prime power");
      if (pp->exponent > 3)
        throw InvalidSpecError("GF order " + std::to_string(q) + " has exponent k = " +
                               std::to_string(pp->exponent) + " > 3");
      return RingSpec::gf(q);
    }
    if (consume("prod:(")) {
      RingSpec left = parse();
      expect(',');
      RingSpec right = parse();
      expect(')');
      return RingSpec::product(std::move(left), std::move(right));
    }
    if (consume("cat:")) {
      std::size_t id_start = pos_;
      while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
      if (pos_ == id_start) fail("expected catalog id");
      std::string id(text_.substr(id_start, pos_ - id_start));
      if (!catalog_.contains(id)) throw InvalidSpecError("unknown catalog id '" + id + "'");
      return RingSpec::catalog(std::move(id));
    }
    pos_ = start;
    fail("expected one of Zn:, Zni:, GF:, prod:(, cat:");
  }

  std::string_view text_;
  const Catalog& catalog_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) { return parse_ring_spec(text, Catalog::builtin()); }

RingSpec parse_ring_spec(std::string_view text, const Catalog& catalog) {
  return Parser(text, catalog).parse_all();
}

std::string to_string(const RingSpec& spec) {
  switch (spec.family) {
    case RingFamily::kZn:
      return "Zn:" + std::to_string(spec.n);
    case RingFamily::kZnGauss:
      return "Zni:" + std::to_string(spec.n);
    case RingFamily::kGF:
      return "GF:" + std::to_string(spec.n);
    case RingFamily::kProduct:
      return "prod:(" + to_string(spec.factors.at(0)) + "," + to_string(spec.factors.at(1)) + ")";
    case RingFamily::kCatalog:
      return "cat:" + spec.catalog_id;
  }
  return {};
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t spec_order(const RingSpec& spec) { return spec_order(spec, Catalog::builtin()); }

std::uint64_t spec_order(const RingSpec& spec, const Catalog& catalog) {
  switch (spec.family) {
    case RingFamily::kZn:
    case RingFamily::kGF:
      return spec.n;
    case RingFamily::kZnGauss:
      return saturating_mul(spec.n, spec.n);
    case RingFamily::kProduct:
      return saturating_mul(spec_order(spec.factors.at(0), catalog),
                            spec_order(spec.factors.at(1), catalog));
    case RingFamily::kCatalog: {
      auto entry = catalog.find(spec.catalog_id);
      if (!entry) throw InvalidSpecError("unknown catalog id '" + spec.catalog_id + "'");
      return entry->algebra.order();
    }
  }
  return 0;
}

}  // namespace zdrlab

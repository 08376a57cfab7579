#include "zdrlab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "zdrlab/errors.hpp"

namespace zdrlab {

AlgebraBuilder::AlgebraBuilder(std::vector<std::string> labels, std::vector<std::uint32_t> moduli) {
  if (moduli.size() != labels.size() + 1)
    throw std::invalid_argument("AlgebraBuilder: moduli must cover the unity and every label");
  sc_.basis_labels.push_back("");
  for (auto& l : labels) sc_.basis_labels.push_back(std::move(l));
  sc_.moduli = std::move(moduli);
  const std::size_t d = sc_.moduli.size();
  sc_.products.assign(d * d, std::vector<std::uint32_t>(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    sc_.products[j][j] = 1;          // 1 * b_j
    sc_.products[j * d][j] = 1;      // b_j * 1
  }
}

std::size_t AlgebraBuilder::index_of(std::string_view label) const {
  auto it = std::find(sc_.basis_labels.begin(), sc_.basis_labels.end(), label);
  if (it == sc_.basis_labels.end())
    throw std::invalid_argument("AlgebraBuilder: unknown basis label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - sc_.basis_labels.begin());
}

AlgebraBuilder& AlgebraBuilder::set(std::string_view a, std::string_view b, std::vector<Term> terms) {
  const std::size_t d = sc_.moduli.size();
  std::vector<std::uint32_t> coeffs(d, 0);
  for (const auto& [label, c] : terms) {
    std::size_t k = index_of(label);
    coeffs[k] = c % sc_.moduli[k];
  }
  std::size_t i = index_of(a), j = index_of(b);
  sc_.products[i * d + j] = coeffs;
  sc_.products[j * d + i] = coeffs;
  return *this;
}

StructureConstants AlgebraBuilder::build() const { return sc_; }

namespace {

CatalogEntry make(std::string id, std::string presentation, AlgebraBuilder algebra,
                  bool cut_vertex = false) {
  return CatalogEntry{std::move(id), std::move(presentation), algebra.build(), cut_vertex};
}

Catalog make_builtin() {
  Catalog c;
  c.add(make("Z3r.r2", "Z3[r]/(r^2)", AlgebraBuilder({"r"}, {3, 3})));
  c.add(make("Z2r.r3", "Z2[r]/(r^3)",
             std::move(AlgebraBuilder({"r", "r^2"}, {2, 2, 2}).set("r", "r", {{"r^2", 1}}))));
  c.add(make("Z4r.2r_r2-2", "Z4[r]/(2r, r^2 - 2)",
             std::move(AlgebraBuilder({"r"}, {4, 2}).set("r", "r", {{"", 2}}))));
  c.add(make("F4r.r2", "GF(4)[r]/(r^2)",
             std::move(AlgebraBuilder({"a", "r", "ar"}, {2, 2, 2, 2})
                           .set("a", "a", {{"", 1}, {"a", 1}})
                           .set("a", "r", {{"ar", 1}})
                           .set("a", "ar", {{"r", 1}, {"ar", 1}}))));
  c.add(make("Z4r.r2+r+1", "Z4[r]/(r^2 + r + 1)",
             std::move(AlgebraBuilder({"r"}, {4, 4}).set("r", "r", {{"", 3}, {"r", 3}}))));
  c.add(make("Z4r.ideal2r^2", "Z4[r]/(2, r)^2", AlgebraBuilder({"r"}, {4, 2})));
  c.add(make("Z2rs.rs2", "Z2[r, s]/(r, s)^2", AlgebraBuilder({"r", "s"}, {2, 2, 2})));

  // Cut-vertex rings. Presentations with an unused generator or a relation
  // that only makes sense with the additive orders fixed are read as below.
  c.add(make("cvA1", "Z2[r, s]/(r^2, s^2 - rs)",
             std::move(AlgebraBuilder({"r", "s", "rs"}, {2, 2, 2, 2})
                           .set("r", "s", {{"rs", 1}})
                           .set("s", "s", {{"rs", 1}})),
             true));
  c.add(make("cvA2", "Z4[r]/(r^2 + 2r)",
             std::move(AlgebraBuilder({"r"}, {4, 4}).set("r", "r", {{"r", 2}})), true));
  c.add(make("cvA3", "Z4[r, s]/(r^2, s^2 - rs, rs - 2, 2r, 2s)",
             std::move(AlgebraBuilder({"r", "s"}, {4, 2, 2})
                           .set("r", "s", {{"", 2}})
                           .set("s", "s", {{"", 2}})),
             true));
  c.add(make("cvA4", "Z8[r]/(2r, r^2 + 4)",
             std::move(AlgebraBuilder({"r"}, {8, 2}).set("r", "r", {{"", 4}})), true));
  c.add(make("cvB1", "Z2[r, s]/(r^2, s^2)",
             std::move(AlgebraBuilder({"r", "s", "rs"}, {2, 2, 2, 2}).set("r", "s", {{"rs", 1}})),
             true));
  c.add(make("cvB2", "Z4[r]/(r^2)", AlgebraBuilder({"r"}, {4, 4}), true));
  c.add(make("cvB3", "Z4[r, s]/(r^2, s^2, rs - 2, 2r, 2s)",
             std::move(AlgebraBuilder({"r", "s"}, {4, 2, 2}).set("r", "s", {{"", 2}})), true));
  return c;
}

constexpr std::string_view kDualNumbersPrefix = "Zpr.r2:";

}  // namespace

const Catalog& Catalog::builtin() {
  static const Catalog catalog = make_builtin();
  return catalog;
}

void Catalog::add(CatalogEntry entry) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const CatalogEntry& e) { return e.id == entry.id; });
  if (it != entries_.end())
    *it = std::move(entry);
  else
    entries_.push_back(std::move(entry));
}

std::optional<CatalogEntry> Catalog::find(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e;
  if (id.starts_with(kDualNumbersPrefix)) {
    auto digits = id.substr(kDualNumbersPrefix.size());
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || !is_prime(p) || p > 65535)
      return std::nullopt;
    std::string ps = std::to_string(p);
    return make(std::string(id), "Z" + ps + "[r]/(r^2)", AlgebraBuilder({"r"}, {p, p}));
  }
  return std::nullopt;
}

}  // namespace zdrlab

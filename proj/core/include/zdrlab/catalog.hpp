#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdrlab/ring.hpp"

namespace zdrlab {

/// A small named ring given by structure constants.
struct CatalogEntry {
  std::string id;
  std::string presentation;  // human-readable quotient presentation
  StructureConstants algebra;
  /// Reconstructed from a cut-vertex classification; such entries must also
  /// pass graph-level validation before their results are trusted.
  bool cut_vertex_candidate = false;
};

/// Lookup table of catalog rings. Besides the fixed entries, ids of the form
/// "Zpr.r2:<p>" (Z_p[r]/(r^2), p prime) are synthesized on demand.
class Catalog {
 public:
  static const Catalog& builtin();

  Catalog() = default;

  void add(CatalogEntry entry);
  std::optional<CatalogEntry> find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }
  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

/// Helper for writing structure constants by basis label:
///   AlgebraBuilder a({"r", "s"}, {4, 2, 2});
///   a.set("r", "s", {{"", 2}});          // r s = 2
class AlgebraBuilder {
 public:
  /// `labels` excludes the unity; `moduli` includes it (moduli[0] is the
  /// characteristic).
  AlgebraBuilder(std::vector<std::string> labels, std::vector<std::uint32_t> moduli);

  using Term = std::pair<std::string, std::uint32_t>;
  AlgebraBuilder& set(std::string_view a, std::string_view b, std::vector<Term> terms);

  StructureConstants build() const;

 private:
  std::size_t index_of(std::string_view label) const;
  StructureConstants sc_;
};

}  // namespace zdrlab

#pragma once

// Named graph families and the closed-form values of gamma, dim and Dim_d
// known for them.

#include <optional>
#include <string>
#include <vector>

#include "zdrlab/graph.hpp"

namespace zdrlab {

enum class FamilyKind { kPath, kCycle, kComplete, kStar, kCompleteBipartite };

/// Path/Cycle/Complete/Star use `n` (the order; Star S_n is one centre plus
/// n - 1 leaves). CompleteBipartite uses part sizes `m` and `n`.
struct FamilyId {
  FamilyKind kind = FamilyKind::kPath;
  std::size_t m = 0;
  std::size_t n = 0;

  static FamilyId path(std::size_t n) { return {FamilyKind::kPath, 0, n}; }
  static FamilyId cycle(std::size_t n) { return {FamilyKind::kCycle, 0, n}; }
  static FamilyId complete(std::size_t n) { return {FamilyKind::kComplete, 0, n}; }
  static FamilyId star(std::size_t n) { return {FamilyKind::kStar, 0, n}; }
  static FamilyId complete_bipartite(std::size_t m, std::size_t n) {
    return {FamilyKind::kCompleteBipartite, m, n};
  }

  std::size_t order() const noexcept { return kind == FamilyKind::kCompleteBipartite ? m + n : n; }

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// "P_5", "C_7", "K_4", "S_6", "K_{2,4}".
std::string to_string(const FamilyId& id);

/// Throws InvalidParamsError unless n >= 1 (Cycle: n >= 3; bipartite: m, n >= 1).
void validate(const FamilyId& id);

/// Canonical numbering: paths and cycles in order along the graph, star
/// centre = 0, bipartite part of size m first.
Graph generate_family(const FamilyId& id);

/// The id recognize_family reports for generate_family(id). Overlaps resolve
/// as Complete > CompleteBipartite (both parts >= 2) > Star (>= 3 leaves) >
/// Cycle > Path, so K_{1,1} is K_2, K_{1,2} and S_3 are P_3, C_3 is K_3, C_4
/// is K_{2,2}, and bipartite part sizes are reported smaller part first.
FamilyId normalize(const FamilyId& id);

/// Shape recognition (degree sequence plus structural checks), not general
/// isomorphism. Returns nullopt when the graph matches no family.
std::optional<FamilyId> recognize_family(const Graph& g);

/// Closed forms; an empty optional means no closed form is known for these
/// parameters and the exact solver must be used.
struct ClosedFormDims {
  std::optional<std::size_t> gamma;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> ddim;
  std::string gamma_note;
  std::string dim_note;
  std::string ddim_note;
};

ClosedFormDims closed_form_dims(const FamilyId& id);

/// A dominating set of size ceil(n/3) in canonical numbering for P_n and C_n;
/// for n >= 4 (paths) and n >= 7 (cycles) it also resolves the graph.
std::optional<std::vector<Vertex>> path_cycle_dominating_witness(const FamilyId& id);

}  // namespace zdrlab

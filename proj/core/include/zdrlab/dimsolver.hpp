#pragma once

// Exact domination number, metric dimension and dominant metric dimension.
//
// All three are solved by the same search: candidate sizes k are tried in
// increasing order starting from a valid lower bound, and for each k the
// k-subsets are enumerated in lexicographic order with two sound prunings:
//
//  * twin classes: a resolving set contains all but at most one vertex of
//    every class of mutually twin vertices;
//  * coverage: once every member of N[v] has been decided without picking
//    one, v can no longer be dominated.
//
// Neither pruning removes a feasible set, so the first hit is the
// lexicographically least minimum witness.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdrlab/graph.hpp"

namespace zdrlab {

enum class Quantity { kGamma, kDim, kDdim };
enum class SolveMethod { kExhaustive, kTwinReduced, kClosedForm, kConvention };
enum class SolveStatus { kSolved, kBudgetExceeded };

std::string to_string(Quantity q);
std::string to_string(SolveMethod m);
std::string to_string(SolveStatus s);

/// Throws std::out_of_range when a vertex of `set` is not in the graph.
bool is_dominating(const Graph& g, std::span<const Vertex> set);
bool is_resolving(const Graph& g, std::span<const Vertex> set);

struct TwinPartition {
  std::vector<std::vector<Vertex>> classes;  // each ascending; ordered by first vertex
  std::vector<std::size_t> class_of;         // vertex -> class index

  /// Sum over classes of (|class| - 1): a lower bound on dim.
  std::size_t resolving_lower_bound() const;
  bool has_nontrivial_class() const;
};

/// u, v are twins iff d(u, x) = d(v, x) for every x other than u and v.
TwinPartition twin_classes(const Graph& g);

struct SolverOptions {
  /// 0 disables the respective cap.
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds time_limit{0};
};

struct QuantityResult {
  Quantity quantity = Quantity::kGamma;
  SolveStatus status = SolveStatus::kSolved;
  std::size_t value = 0;
  std::vector<Vertex> witness;
  SolveMethod method = SolveMethod::kExhaustive;
  std::size_t lower_bound = 0;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;

  bool solved() const noexcept { return status == SolveStatus::kSolved; }
};

/// gamma(G). Throws EmptyGraphError on the empty graph.
QuantityResult domination_number(const Graph& g, const SolverOptions& options = {});

/// dim(G). Throws DisconnectedGraphError on disconnected input.
QuantityResult metric_dimension(const Graph& g, const SolverOptions& options = {});

/// Dim_d(G); the single-vertex graph is 0 by convention. `known_lower_bound`
/// lets callers pass max(gamma, dim) when those are already solved.
QuantityResult dominant_metric_dimension(const Graph& g, const SolverOptions& options = {},
                                         std::size_t known_lower_bound = 0);

/// Certifies a candidate witness without search: succeeds (method
/// closed_form) only if the witness satisfies the quantity's predicate and
/// its size equals the solver's lower bound for that quantity.
std::optional<QuantityResult> certify_by_lower_bound(const Graph& g, Quantity q,
                                                     std::span<const Vertex> witness);

/// Lower bound the search starts from (twin bound and/or ceil(n / (Delta + 1))).
std::size_t search_lower_bound(const Graph& g, Quantity q);

struct DimensionReport {
  std::optional<QuantityResult> gamma;
  std::optional<QuantityResult> dim;
  std::optional<QuantityResult> ddim;

  bool all_solved() const;
};

struct Which {
  bool gamma = true;
  bool dim = true;
  bool ddim = true;
};

/// Solves the selected quantities; Dim_d reuses max(gamma, dim) as its
/// starting bound when both are solved first.
DimensionReport solve_dimensions(const Graph& g, Which which = {}, const SolverOptions& options = {});

}  // namespace zdrlab

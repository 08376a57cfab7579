#pragma once

#include <optional>
#include <string>

#include "zdrlab/families.hpp"
#include "zdrlab/graph.hpp"
#include "zdrlab/ring.hpp"
#include "zdrlab/verify.hpp"

namespace zdrlab::detail {

inline std::string num(std::size_t v) { return std::to_string(v); }

inline std::string num_or_inf(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

/// Family name with paths spelled as paths ("P_2", "P_3"), "empty" for the
/// empty graph and "unrecognized" otherwise.
std::string shape_name(const Graph& g);

bool is_path(const Graph& g);
bool is_cycle(const Graph& g);

/// (centre, leaves) when g is K_{1,t} with t >= 1.
std::optional<std::pair<Vertex, std::size_t>> star_centre(const Graph& g);

/// Sorted part sizes when g is complete bipartite (parts may have size 1).
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g);

/// PASS when `match`; otherwise ERRATUM if the ledger explains `pattern`
/// under `theorem`, else FAIL.
TheoremVerdict judge(std::string theorem, std::string instance, std::string aspect, std::string claimed,
                     std::string computed, bool match, const std::string& pattern = {});

TheoremVerdict skipped(std::string theorem, std::string instance, std::string aspect, std::string note);

/// Marks a verdict that depends on an unsolved quantity as SKIPPED.
TheoremVerdict budget_skip(std::string theorem, std::string instance, std::string aspect,
                           const QuantityResult& r);

BuildOptions build_options(const Catalog* catalog);

/// A Table 1 row with claimed and computed columns filled; status unset.
Table1Row compute_table1_row(std::uint64_t n, const SolverOptions& solver);

/// Ledger pattern for a mismatching Table 1 row, or "".
std::string table1_pattern(const Table1Row& row);

}  // namespace zdrlab::detail

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdrlab/catalog.hpp"
#include "zdrlab/dimsolver.hpp"

namespace zdrlab {

enum class VerdictStatus { kPass, kErratum, kFail, kSkipped, kInvalidInstance };

/// "PASS", "ERRATUM", "FAIL", "SKIPPED", "INVALID_INSTANCE".
std::string to_string(VerdictStatus s);

struct TheoremVerdict {
  std::string theorem_id;
  std::string instance;
  std::string aspect;
  std::string claimed;
  std::string computed;
  VerdictStatus status = VerdictStatus::kPass;
  std::string erratum;  // ledger id, set only when status is ERRATUM
  std::string method;   // solver method behind `computed`, if any
  std::string note;
  double elapsed_ms = 0.0;
};

struct ErrataEntry {
  std::string id;
  std::string printed_claim;
  std::string computed_truth;
  std::string explanation;
  /// (theorem id, mismatch pattern) pairs this entry accounts for.
  std::vector<std::pair<std::string, std::string>> matches;
};

const std::vector<ErrataEntry>& errata_ledger();

/// Ledger id explaining a mismatch of `pattern` under `theorem_id`, or "".
std::string lookup_erratum(std::string_view theorem_id, std::string_view pattern);

/// Instance grids for every check. Ring lists are ring-spec strings.
struct VerifyGrids {
  std::size_t family_max = 16;
  std::size_t complete_max = 12;
  std::size_t star_max = 14;
  std::size_t bipartite_total_max = 14;
  std::size_t spot_max = 60;

  std::uint64_t t21_n_max = 40;
  std::uint64_t t26_n_max = 200;
  std::uint64_t l2121_n_max = 30;

  std::vector<std::uint64_t> table1_n = {7, 4, 8, 9, 25, 49, 121, 15, 21, 35, 77};
  std::vector<std::uint64_t> field_orders = {3, 4, 5, 7, 8, 9};
  std::vector<std::uint64_t> t22_primes = {3, 5, 7, 11};
  std::vector<std::uint64_t> tab2_primes = {2, 3, 5, 7, 11};
  std::vector<std::uint64_t> t2123_case1 = {3, 7};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t2123_case2 = {{3, 7}};
  std::vector<std::uint64_t> t2123_case3 = {5, 13};

  std::vector<std::string> p21_rings = {"Zn:6",         "Zn:8",         "Zn:9",
                                        "prod:(Zn:2,Zn:2)", "cat:Z3r.r2", "cat:Z2r.r3",
                                        "cat:Z4r.2r_r2-2"};
  std::vector<std::string> p22_rings = {"prod:(Zn:3,Zn:3)", "cat:Z2rs.rs2", "cat:F4r.r2",
                                        "cat:Z4r.r2+r+1", "cat:Z4r.ideal2r^2"};
  std::vector<std::string> t22b_rings = {"Zn:8", "Zn:16", "Zn:27", "cat:Z2r.r3", "cat:cvB2"};
  std::vector<std::string> t23_rings = {"cat:cvA1", "cat:cvA2", "cat:cvA3", "cat:cvA4",
                                        "cat:cvB1", "cat:cvB2", "cat:cvB3"};
  std::vector<std::string> t24_local_rings = {"Zn:4",       "Zn:8",       "Zn:9",
                                              "cat:Z3r.r2", "cat:Z2r.r3", "cat:Z4r.2r_r2-2",
                                              "cat:Zpr.r2:2"};
};

struct VerifyConfig {
  std::vector<std::string> checks;  // run order; empty runs nothing
  VerifyGrids grids;
  SolverOptions solver;
  const Catalog* catalog = nullptr;  // nullptr: Catalog::builtin()
  bool parallel = true;
};

/// Every registered check id, in canonical order.
const std::vector<std::string>& registry_ids();

/// All checks with default grids.
VerifyConfig default_verify_config();

/// Parses `key = value` lines ('#' comments). Keys: checks, budget_ms,
/// max_nodes and the VerifyGrids field names. Integer lists are comma
/// separated, ring lists are ';' separated, t2123_case2 pairs are "pxq".
/// Throws InvalidParamsError on unknown keys, bad values or unknown ids.
VerifyConfig parse_verify_config(std::string_view text);

/// Runs one check. Throws InvalidParamsError for an unknown id.
std::vector<TheoremVerdict> verify_theorem(std::string_view id, const VerifyConfig& config);

struct VerifySummary {
  std::size_t pass = 0, erratum = 0, fail = 0, skipped = 0, invalid = 0;
  std::vector<std::string> errata_hit;  // sorted, unique
  bool budget_exceeded = false;
};

struct VerifyReport {
  std::vector<TheoremVerdict> verdicts;
  VerifySummary summary;
};

VerifyReport run_verify(const VerifyConfig& config);

/// 0 when no FAIL verdict, 3 otherwise; 4 when only budget exhaustion skipped work.
int exit_code(const VerifyReport& report);

/// `deterministic` zeroes every elapsed time.
std::string report_json(const VerifyReport& report, bool deterministic);
std::string report_text(const VerifyReport& report, bool deterministic);

// ---------------------------------------------------------------------------
// Tables

struct Table1Row {
  std::uint64_t n = 0;
  std::string shape_class;  // "p", "2^2", "3^2", "p^2", "2^3", "pq", "UNSUPPORTED"
  std::string vertices, edges, diameter, girth, shape, ddim;  // computed
  std::string claimed_vertices, claimed_edges, claimed_diameter, claimed_girth, claimed_shape,
      claimed_ddim;
  VerdictStatus status = VerdictStatus::kPass;
  std::string erratum;
  std::string method;
};

std::vector<Table1Row> emit_table1(const std::vector<std::uint64_t>& n_list, const SolverOptions& solver = {});
std::string render_table1_csv(const std::vector<Table1Row>& rows);
std::string render_table1_text(const std::vector<Table1Row>& rows);

struct Table2Row {
  int row = 0;  // 1..4
  std::string ring;
  std::string claimed;  // Dim_d claimed for this row
  std::string dim, ddim;
  VerdictStatus status = VerdictStatus::kPass;
  std::string erratum;
  std::string note;
};

std::vector<Table2Row> emit_table2(const VerifyGrids& grids, const SolverOptions& solver = {},
                                   const Catalog* catalog = nullptr);
std::string render_table2_csv(const std::vector<Table2Row>& rows);
std::string render_table2_text(const std::vector<Table2Row>& rows);

}  // namespace zdrlab

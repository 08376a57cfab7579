#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>

#include "json.hpp"
#include "zdrlab/errors.hpp"
#include "zdrlab/verify.hpp"

namespace zdrlab {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

VerifyConfig only(std::vector<std::string> ids) {
  VerifyConfig c = default_verify_config();
  c.checks = std::move(ids);
  return c;
}

const TheoremVerdict* find_verdict(const std::vector<TheoremVerdict>& vs, const std::string& instance_part,
                                   const std::string& aspect) {
  for (const auto& v : vs)
    if (v.instance.find(instance_part) != std::string::npos && v.aspect.rfind(aspect, 0) == 0) return &v;
  return nullptr;
}

TEST(Errata, LedgerHasSixEntriesWithMatchers) {
  const auto& ledger = errata_ledger();
  ASSERT_EQ(ledger.size(), 6u);
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    EXPECT_EQ(ledger[i].id, "E" + std::to_string(i + 1));
    EXPECT_FALSE(ledger[i].matches.empty());
    EXPECT_FALSE(ledger[i].printed_claim.empty());
    EXPECT_FALSE(ledger[i].computed_truth.empty());
  }
  EXPECT_EQ(lookup_erratum("T2.6", "pq_with_2"), "E6");
  EXPECT_EQ(lookup_erratum("T2122", "bipartite_sides_minus_one"), "E3");
  EXPECT_EQ(lookup_erratum("T2.6", "case3_girth"), "");
  EXPECT_EQ(lookup_erratum("T2.6", ""), "");
}

TEST(Registry, ListsEveryCheckOnce) {
  const auto& ids = registry_ids();
  EXPECT_EQ(ids.size(), 23u);
  for (const char* id : {"R1", "T6", "P2.1", "T2.3", "T2.6", "T2121", "L2121", "T2123", "TAB1", "TAB2"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

TEST(Verify, UnknownIdIsRejected) {
  EXPECT_THROW(verify_theorem("T9.9", default_verify_config()), InvalidParamsError);
  EXPECT_THROW(run_verify(only({"R1", "nope"})), InvalidParamsError);
}

TEST(Verify, EmptyCheckListGivesEmptyReport) {
  VerifyReport r = run_verify(only({}));
  EXPECT_TRUE(r.verdicts.empty());
  EXPECT_EQ(exit_code(r), 0);
}

TEST(Verify, PqFormulaHoldsForOddPrimes) {
  auto vs = verify_theorem("T2.6", only({}));
  const TheoremVerdict* v = find_verdict(vs, "n=15", "Dim_d (row pq)");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::kPass);
  EXPECT_EQ(v->claimed, "4");
  EXPECT_EQ(v->computed, "4");

  const TheoremVerdict* even = find_verdict(vs, "n=6", "Dim_d");
  ASSERT_NE(even, nullptr);
  EXPECT_EQ(even->status, VerdictStatus::kErratum);
  EXPECT_EQ(even->erratum, "E6");
}

TEST(Verify, PathOnThreeVerticesIsAnErratum) {
  auto vs = verify_theorem("P2.1", only({}));
  const TheoremVerdict* v = find_verdict(vs, "Zn:6", "Dim_d");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::kErratum);
  EXPECT_EQ(v->erratum, "E1");
  EXPECT_EQ(v->claimed, "1");
  EXPECT_EQ(v->computed, "2");
}

TEST(Verify, LocalGaussianCaseSplitsIntoGirthErratumAndCorrectCount) {
  VerifyConfig c = only({});
  c.grids.t2123_case1.clear();
  c.grids.t2123_case2.clear();
  c.grids.t2123_case3 = {5};
  auto vs = verify_theorem("T2123", c);
  const TheoremVerdict* g = find_verdict(vs, "case 3, p=5", "girth");
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->status, VerdictStatus::kErratum);
  EXPECT_EQ(g->erratum, "E5");
  EXPECT_EQ(g->computed, "4");
  const TheoremVerdict* d = find_verdict(vs, "case 3, p=5", "Dim_d");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->status, VerdictStatus::kPass);
  EXPECT_EQ(d->computed, "6");
}

TEST(Verify, BipartiteSidesErratum) {
  auto vs = verify_theorem("T2122", only({}));
  bool hit = std::any_of(vs.begin(), vs.end(), [](const TheoremVerdict& v) { return v.erratum == "E3"; });
  EXPECT_TRUE(hit);
  for (const auto& v : vs) EXPECT_NE(v.status, VerdictStatus::kFail) << v.instance << " " << v.aspect;
}

TEST(Verify, InvalidCatalogEntryIsIsolated) {
  Catalog cat = Catalog::builtin();
  StructureConstants bad;
  bad.basis_labels = {"", "r"};
  bad.moduli = {4, 3};
  bad.products = {{1, 0}, {0, 1}, {0, 1}, {0, 0}};
  cat.add({"broken", "not a ring", bad, true});

  VerifyConfig c = only({"T2.3"});
  c.catalog = &cat;
  c.grids.t23_rings = {"cat:cvA1", "cat:broken", "cat:Z2rs.rs2", "cat:cvB1"};
  VerifyReport r = run_verify(c);

  ASSERT_EQ(r.verdicts.size(), 4u);
  EXPECT_EQ(r.verdicts[0].status, VerdictStatus::kPass);
  EXPECT_EQ(r.verdicts[1].status, VerdictStatus::kInvalidInstance);
  EXPECT_THAT(r.verdicts[1].note, HasSubstr("validation"));
  EXPECT_EQ(r.verdicts[2].status, VerdictStatus::kInvalidInstance);
  EXPECT_EQ(r.verdicts[3].status, VerdictStatus::kPass);
  EXPECT_EQ(r.summary.invalid, 2u);
  EXPECT_EQ(exit_code(r), 0);
}

TEST(Verify, ParallelAndSequentialRunsAgree) {
  VerifyConfig c = only({"T1", "P2.1", "T2.6", "TAB1"});
  c.grids.t26_n_max = 60;
  VerifyReport par = run_verify(c);
  c.parallel = false;
  VerifyReport seq = run_verify(c);
  EXPECT_EQ(report_json(par, true), report_json(seq, true));
  EXPECT_EQ(report_text(par, true), report_text(seq, true));
}

TEST(Verify, BudgetExhaustionSetsExitCodeFour) {
  VerifyConfig c = only({"T2122"});
  c.solver.max_nodes = 1;
  VerifyReport r = run_verify(c);
  EXPECT_TRUE(r.summary.budget_exceeded);
  EXPECT_EQ(exit_code(r), 4);
  EXPECT_EQ(r.summary.fail, 0u);
}

TEST(Verify, JsonReportShape) {
  VerifyReport r = run_verify(only({"P2.1", "T6"}));
  auto doc = nlohmann::json::parse(report_json(r, true));
  ASSERT_TRUE(doc["verdicts"].is_array());
  const auto& v0 = doc["verdicts"][0];
  for (const char* key : {"theorem_id", "instance", "aspect", "claimed", "computed", "status", "method", "note"})
    EXPECT_TRUE(v0.contains(key)) << key;
  EXPECT_EQ(v0["elapsed_ms"], 0);
  EXPECT_EQ(doc["summary"]["total"], r.verdicts.size());
  EXPECT_EQ(doc["summary"]["fail"], 0);
  EXPECT_EQ(doc["summary"]["errata_hit"], nlohmann::json::array({"E1", "E2"}));
  ASSERT_EQ(doc["errata"].size(), 2u);
  EXPECT_EQ(doc["errata"][0]["id"], "E1");
}

TEST(VerifyConfigParse, ReadsKeysAndLists) {
  VerifyConfig c = parse_verify_config(
      "# comment\n"
      "checks = T1, TAB1\n"
      "budget_ms = 500\n"
      "max_nodes = 1000\n"
      "table1_n = 4, 15\n"
      "t2123_case2 = 3x7, 5x13\n"
      "p21_rings = Zn:6; prod:(Zn:2,Zn:2)\n");
  EXPECT_THAT(c.checks, ElementsAre("T1", "TAB1"));
  EXPECT_EQ(c.solver.time_limit.count(), 500);
  EXPECT_EQ(c.solver.max_nodes, 1000u);
  EXPECT_THAT(c.grids.table1_n, ElementsAre(4u, 15u));
  ASSERT_EQ(c.grids.t2123_case2.size(), 2u);
  EXPECT_EQ(c.grids.t2123_case2[1].first, 5u);
  EXPECT_EQ(c.grids.t2123_case2[1].second, 13u);
  EXPECT_THAT(c.grids.p21_rings, ElementsAre("Zn:6", "prod:(Zn:2,Zn:2)"));
  EXPECT_EQ(c.grids.family_max, VerifyGrids{}.family_max);
}

TEST(VerifyConfigParse, RejectsBadInput) {
  EXPECT_THROW(parse_verify_config("no_such_key = 1\n"), InvalidParamsError);
  EXPECT_THROW(parse_verify_config("family_max = many\n"), InvalidParamsError);
  EXPECT_THROW(parse_verify_config("just text\n"), InvalidParamsError);
  EXPECT_THROW(parse_verify_config("checks = T1, T99\n"), InvalidParamsError);
}

TEST(Tables, Table1Rows) {
  auto rows = emit_table1({7, 4, 8, 15, 14, 12});
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].shape_class, "p");
  EXPECT_EQ(rows[0].vertices, "0");
  EXPECT_EQ(rows[0].status, VerdictStatus::kPass);
  EXPECT_EQ(rows[1].shape, "K_1");
  EXPECT_EQ(rows[1].ddim, "0");
  EXPECT_EQ(rows[2].shape, "P_3");
  EXPECT_EQ(rows[2].erratum, "E1");
  EXPECT_EQ(rows[3].shape, "K_{2,4}");
  EXPECT_EQ(rows[3].status, VerdictStatus::kPass);
  EXPECT_EQ(rows[4].erratum, "E6");
  EXPECT_EQ(rows[5].shape_class, "UNSUPPORTED");

  std::string csv = render_table1_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')).find("n,"), 0u);
  EXPECT_THAT(csv, HasSubstr("\"K_{2,4}\""));
}

TEST(Tables, Table2RowsCoverAllFourRows) {
  auto rows = emit_table2(VerifyGrids{});
  std::set<int> seen;
  for (const auto& r : rows) {
    seen.insert(r.row);
    EXPECT_NE(r.status, VerdictStatus::kFail) << r.ring;
  }
  EXPECT_EQ(seen, (std::set<int>{1, 2, 3, 4}));
  auto z9 = std::find_if(rows.begin(), rows.end(), [](const Table2Row& r) { return r.ring == "Zn:9"; });
  ASSERT_NE(z9, rows.end());
  EXPECT_EQ(z9->ddim, "1");
}

TEST(Names, VerdictStatusStrings) {
  EXPECT_EQ(to_string(VerdictStatus::kPass), "PASS");
  EXPECT_EQ(to_string(VerdictStatus::kErratum), "ERRATUM");
  EXPECT_EQ(to_string(VerdictStatus::kInvalidInstance), "INVALID_INSTANCE");
}

}  // namespace
}  // namespace zdrlab

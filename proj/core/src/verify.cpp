#include "zdrlab/verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "verify_common.hpp"
#include "zdrlab/errors.hpp"

namespace zdrlab {

using detail::judge;
using detail::num;

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kPass:
      return "PASS";
    case VerdictStatus::kErratum:
      return "ERRATUM";
    case VerdictStatus::kFail:
      return "FAIL";
    case VerdictStatus::kSkipped:
      return "SKIPPED";
    case VerdictStatus::kInvalidInstance:
      return "INVALID_INSTANCE";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
using Verdicts = std::vector<TheoremVerdict>;

std::string signed_num(long long v) { return std::to_string(v); }

/// Shared state for one check: configuration, output and per-instance timing.
class Check {
 public:
  Check(std::string id, const VerifyConfig& config) : id_(std::move(id)), config_(config) {}

  const VerifyGrids& grids() const { return config_.grids; }
  const SolverOptions& solver() const { return config_.solver; }
  const std::string& id() const { return id_; }

  FiniteRing ring(const std::string& spec) const {
    return build_ring(spec, detail::build_options(config_.catalog));
  }

  /// Runs `body` for one instance; errors become INVALID_INSTANCE verdicts and
  /// the elapsed time is attached to every verdict the instance produced.
  void instance(const std::string& name, const std::function<void()>& body) {
    const std::size_t first = out_.size();
    const auto start = Clock::now();
    try {
      body();
    } catch (const Error& e) {
      TheoremVerdict v;
      v.theorem_id = id_;
      v.instance = name;
      v.status = VerdictStatus::kInvalidInstance;
      v.note = e.what();
      out_.push_back(std::move(v));
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (std::size_t i = first; i < out_.size(); ++i) {
      if (out_[i].instance.empty()) out_[i].instance = name;
      out_[i].elapsed_ms = ms;
    }
  }

  TheoremVerdict& add(TheoremVerdict v) {
    out_.push_back(std::move(v));
    return out_.back();
  }

  TheoremVerdict& compare_if(const std::string& aspect, const std::string& claimed, const std::string& computed,
                             bool match, const std::string& pattern = {}) {
    return add(judge(id_, "", aspect, claimed, computed, match, pattern));
  }

  TheoremVerdict& compare(const std::string& aspect, const std::string& claimed, const std::string& computed,
                          const std::string& pattern = {}) {
    return compare_if(aspect, claimed, computed, claimed == computed, pattern);
  }

  /// Compares a solver result against `claimed`; SKIPPED when the budget ran out.
  TheoremVerdict& compare_quantity(const std::string& aspect, const std::string& claimed, const QuantityResult& r,
                                   const std::function<bool(std::size_t)>& match = {},
                                   const std::string& pattern = {}) {
    if (!r.solved()) return add(detail::budget_skip(id_, "", aspect, r));
    const bool ok = match ? match(r.value) : claimed == num(r.value);
    auto& v = compare_if(aspect, claimed, num(r.value), ok, pattern);
    v.method = to_string(r.method);
    return v;
  }

  void skip(const std::string& aspect, const std::string& note) { add(detail::skipped(id_, "", aspect, note)); }

  Verdicts take() { return std::move(out_); }

 private:
  std::string id_;
  const VerifyConfig& config_;
  Verdicts out_;
};

QuantityResult solve(const Graph& g, Quantity q, const SolverOptions& opts) {
  switch (q) {
    case Quantity::kGamma:
      return domination_number(g, opts);
    case Quantity::kDim:
      return metric_dimension(g, opts);
    case Quantity::kDdim:
      break;
  }
  return dominant_metric_dimension(g, opts);
}

std::string quantity_aspect(Quantity q) {
  switch (q) {
    case Quantity::kGamma:
      return "gamma";
    case Quantity::kDim:
      return "dim";
    case Quantity::kDdim:
      break;
  }
  return "Dim_d";
}

std::optional<std::size_t> closed_value(const ClosedFormDims& c, Quantity q) {
  switch (q) {
    case Quantity::kGamma:
      return c.gamma;
    case Quantity::kDim:
      return c.dim;
    case Quantity::kDdim:
      break;
  }
  return c.ddim;
}

/// Solver-verified family check of quantity `q` against the closed form.
void family_exact(Check& check, const FamilyId& id, Quantity q) {
  check.instance(to_string(id), [&] {
    auto claimed = closed_value(closed_form_dims(id), q);
    if (!claimed) return check.skip(quantity_aspect(q), "no closed form for this order");
    Graph g = generate_family(id);
    check.compare_quantity(quantity_aspect(q), num(*claimed), solve(g, q, check.solver()));
  });
}

/// Spot check beyond the solver-verified range: a lower-bound certificate for
/// paths and cycles when one exists, the exact solver otherwise.
void family_spot(Check& check, const FamilyId& id, Quantity q) {
  check.instance(to_string(id), [&] {
    auto claimed = closed_value(closed_form_dims(id), q);
    if (!claimed) return check.skip(quantity_aspect(q), "no closed form for this order");
    Graph g = generate_family(id);
    std::optional<QuantityResult> r;
    if (q != Quantity::kDim) {
      if (auto witness = path_cycle_dominating_witness(id)) r = certify_by_lower_bound(g, q, *witness);
    }
    if (!r) r = solve(g, q, check.solver());
    check.compare_quantity(quantity_aspect(q), num(*claimed), *r).note = "spot check";
  });
}

void family_range(Check& check, FamilyKind kind, std::size_t lo, std::size_t hi, std::size_t spot_max,
                  std::initializer_list<Quantity> qs) {
  auto make = [kind](std::size_t n) { return FamilyId{kind, 0, n}; };
  for (std::size_t n = lo; n <= hi; ++n)
    for (Quantity q : qs) family_exact(check, make(n), q);
  for (std::size_t n = std::max(lo, hi + 1); n <= spot_max; ++n)
    for (Quantity q : qs) family_spot(check, make(n), q);
}

void bipartite_range(Check& check, std::size_t total_max, std::size_t spot_max, Quantity q) {
  for (std::size_t m = 2; 2 * m <= total_max; ++m)
    for (std::size_t n = m; m + n <= total_max; ++n) family_exact(check, FamilyId::complete_bipartite(m, n), q);
  if (spot_max > total_max && spot_max >= 4) {
    std::set<std::pair<std::size_t, std::size_t>> spots = {
        {2, spot_max - 2}, {spot_max / 4, spot_max - spot_max / 4}, {spot_max / 2, spot_max - spot_max / 2}};
    for (auto [m, n] : spots)
      if (m >= 2) family_spot(check, FamilyId::complete_bipartite(m, n), q);
  }
}

// --- family claims -----------------------------------------------------------

Verdicts check_r1(const VerifyConfig& c) {
  Check check("R1", c);
  const auto& g = c.grids;
  family_range(check, FamilyKind::kPath, 2, g.family_max, g.spot_max, {Quantity::kGamma, Quantity::kDim});
  family_range(check, FamilyKind::kCycle, 3, g.family_max, g.spot_max, {Quantity::kGamma, Quantity::kDim});
  return check.take();
}

Verdicts check_r2(const VerifyConfig& c) {
  Check check("R2", c);
  family_range(check, FamilyKind::kComplete, 2, c.grids.complete_max, c.grids.spot_max,
               {Quantity::kGamma, Quantity::kDim});
  return check.take();
}

Verdicts check_r3(const VerifyConfig& c) {
  Check check("R3", c);
  family_range(check, FamilyKind::kStar, 3, c.grids.star_max, c.grids.spot_max, {Quantity::kGamma, Quantity::kDim});
  return check.take();
}

Verdicts check_r4(const VerifyConfig& c) {
  Check check("R4", c);
  bipartite_range(check, c.grids.bipartite_total_max, c.grids.spot_max, Quantity::kGamma);
  bipartite_range(check, c.grids.bipartite_total_max, c.grids.spot_max, Quantity::kDim);
  return check.take();
}

Verdicts check_t1(const VerifyConfig& c) {
  Check check("T1", c);
  family_range(check, FamilyKind::kCycle, 7, c.grids.family_max, c.grids.spot_max, {Quantity::kDdim});
  return check.take();
}

Verdicts check_t2(const VerifyConfig& c) {
  Check check("T2", c);
  family_range(check, FamilyKind::kStar, 2, c.grids.star_max, c.grids.spot_max, {Quantity::kDdim});
  return check.take();
}

Verdicts check_t3(const VerifyConfig& c) {
  Check check("T3", c);
  bipartite_range(check, c.grids.bipartite_total_max, c.grids.spot_max, Quantity::kDdim);
  return check.take();
}

Verdicts check_t4(const VerifyConfig& c) {
  Check check("T4", c);
  family_range(check, FamilyKind::kPath, 4, c.grids.family_max, c.grids.spot_max, {Quantity::kDdim});
  return check.take();
}

Verdicts check_t5(const VerifyConfig& c) {
  Check check("T5", c);
  family_range(check, FamilyKind::kComplete, 2, c.grids.complete_max, c.grids.spot_max, {Quantity::kDdim});
  return check.take();
}

Verdicts check_t6(const VerifyConfig& c) {
  Check check("T6", c);
  for (std::size_t n = 1; n <= c.grids.family_max; ++n) {
    const FamilyId id = FamilyId::path(n);
    check.instance(to_string(id), [&] {
      QuantityResult r = dominant_metric_dimension(generate_family(id), c.solver);
      if (!r.solved()) return void(check.add(detail::budget_skip("T6", "", "Dim_d = 1", r)));
      const std::string claimed = n <= 2 ? "yes" : "no";
      const std::string computed = r.value == 1 ? "yes" : "no";
      auto& v = check.compare("Dim_d = 1", claimed, computed, n == 1 ? "single_vertex_convention" : "");
      v.method = to_string(r.method);
      v.note = "Dim_d = " + num(r.value);
    });
  }
  return check.take();
}

// --- ring claims ---------------------------------------------------------------

std::string complete_or_shape(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 0 && g.size() == n * (n - 1) / 2) return "K_" + num(n);
  return detail::shape_name(g);
}

std::string bipartite_or_shape(const Graph& g) {
  if (auto parts = detail::complete_bipartite_parts(g)) return "K_{" + num(parts->first) + "," + num(parts->second) + "}";
  return detail::shape_name(g);
}

std::string pair_shape(std::uint64_t a, std::uint64_t b) {
  return "K_{" + num(std::min(a, b)) + "," + num(std::max(a, b)) + "}";
}

Verdicts check_p21(const VerifyConfig& c) {
  Check check("P2.1", c);
  for (const auto& spec : c.grids.p21_rings) {
    check.instance("ring=" + spec, [&] {
      Graph g = build_zdgraph(check.ring(spec));
      const bool p3 = detail::is_path(g) && g.order() == 3;
      check.compare_if("shape", "P_2 or P_3", detail::shape_name(g),
                       detail::is_path(g) && (g.order() == 2 || g.order() == 3));
      check.compare_quantity("Dim_d", "1", dominant_metric_dimension(g, c.solver), {}, p3 ? "p3_ddim" : "");
    });
  }
  return check.take();
}

Verdicts check_p22(const VerifyConfig& c) {
  Check check("P2.2", c);
  for (const auto& spec : c.grids.p22_rings) {
    check.instance("ring=" + spec, [&] {
      Graph g = build_zdgraph(check.ring(spec));
      const bool cycle = detail::is_cycle(g);
      check.compare_if("shape", "C_m, m <= 4", cycle ? "C_" + num(g.order()) : detail::shape_name(g),
                       cycle && g.order() <= 4);
      check.compare_quantity("Dim_d", "2", dominant_metric_dimension(g, c.solver));
    });
  }
  return check.take();
}

std::vector<std::string> t21_rings(const VerifyConfig& c) {
  std::vector<std::string> rings;
  for (std::uint64_t n = 2; n <= c.grids.t21_n_max; ++n) rings.push_back("Zn:" + num(n));
  for (const char* s : {"GF:4", "GF:8", "GF:9", "GF:25", "Zni:2", "Zni:3", "Zni:5", "Zni:7", "Zni:9",
                        "prod:(Zn:2,Zn:2)", "prod:(GF:4,Zn:3)"})
    rings.emplace_back(s);
  return rings;
}

Verdicts check_t21(const VerifyConfig& c) {
  Check check("T2.1", c);
  for (const auto& spec : t21_rings(c)) {
    check.instance("ring=" + spec, [&] {
      FiniteRing ring = check.ring(spec);
      const std::string claimed = ring_properties(ring).is_integral_domain ? "undefined" : "finite";
      try {
        Graph g = build_zdgraph(ring);
        QuantityResult r = dominant_metric_dimension(g, c.solver);
        auto& v = check.compare("Dim_d defined", claimed, "finite");
        v.note = "|L(R)| = " + num(g.order()) + (r.solved() ? ", Dim_d = " + num(r.value) : ", Dim_d over budget");
        v.method = to_string(r.method);
      } catch (const EmptyGraphError&) {
        check.compare("Dim_d defined", claimed, "undefined").note = "no nonzero zero divisors";
      }
    });
  }
  return check.take();
}

bool all_nilpotent(const FiniteRing& ring, const std::vector<Element>& L) {
  auto nil = ring_properties(ring).nilpotents;
  return std::all_of(L.begin(), L.end(), [&](Element x) { return std::binary_search(nil.begin(), nil.end(), x); });
}

bool square_zero(const FiniteRing& ring, const std::vector<Element>& L) {
  for (Element x : L)
    for (Element y : L)
      if (ring.mul(x, y) != ring.zero()) return false;
  return true;
}

Verdicts check_t22(const VerifyConfig& c) {
  Check check("T2.2", c);
  std::vector<std::string> part_a;
  for (std::uint64_t p : c.grids.t22_primes) part_a.push_back("Zn:" + num(p * p));
  part_a.emplace_back("cat:Z2rs.rs2");

  for (const auto& spec : part_a) {
    check.instance("(a) ring=" + spec, [&] {
      FiniteRing ring = check.ring(spec);
      auto L = zero_divisors(ring).members;
      if (L.empty() || !all_nilpotent(ring, L) || !square_zero(ring, L))
        return check.skip("Dim_d", "hypothesis fails: L(R) not nilpotent with L(R)^2 = 0");
      Graph g = build_zdgraph(ring);
      const std::string small = L.size() < 3 ? "|L(R)| < 3, outside the stated range; checked anyway" : "";
      check.compare("shape", "K_" + num(L.size()), complete_or_shape(g)).note = small;
      check.compare_quantity("Dim_d", num(L.size() - 1), dominant_metric_dimension(g, c.solver)).note = small;
    });
  }
  for (const auto& spec : c.grids.t22b_rings) {
    check.instance("(b) ring=" + spec, [&] {
      FiniteRing ring = check.ring(spec);
      auto L = zero_divisors(ring).members;
      if (L.size() < 3 || !all_nilpotent(ring, L))
        return check.skip("Dim_d finite", "hypothesis fails: needs |L(R)| >= 3, all nilpotent");
      Graph g = build_zdgraph(ring);
      QuantityResult r = dominant_metric_dimension(g, c.solver);
      if (!r.solved()) return void(check.add(detail::budget_skip("T2.2", "", "Dim_d finite", r)));
      auto& v = check.compare("Dim_d finite", "finite", "finite");
      v.method = to_string(r.method);
      v.note = "sanity check; Dim_d = " + num(r.value) + (square_zero(ring, L) ? "" : ", L(R)^2 != 0");
    });
  }
  return check.take();
}

Verdicts check_t23(const VerifyConfig& c) {
  Check check("T2.3", c);
  for (const auto& spec : c.grids.t23_rings) {
    check.instance("ring=" + spec, [&] {
      const bool from_catalog = spec.rfind("cat:", 0) == 0;
      auto invalid = [&](const std::string& why) {
        auto v = detail::skipped("T2.3", "", "Dim_d", why);
        if (from_catalog) v.status = VerdictStatus::kInvalidInstance;
        check.add(std::move(v));
      };
      std::optional<FiniteRing> ring;
      try {
        ring = check.ring(spec);
      } catch (const CatalogValidationError& e) {
        return invalid(std::string("ring validation failed: ") + e.what());
      }
      Graph g = build_zdgraph(*ring);
      GraphInvariants inv = graph_invariants(g);
      if (g.order() < 3) return invalid("|L(R)| < 3");
      if (inv.cut_vertices.empty()) return invalid("graph has no cut vertex");
      if (!inv.degree_one_vertices.empty()) return invalid("graph has a vertex of degree 1");
      std::string cuts;
      for (Vertex v : inv.cut_vertices) cuts += (cuts.empty() ? "" : " ") + g.label(v);
      auto& v = check.compare_quantity("Dim_d", "3 or 5", dominant_metric_dimension(g, c.solver),
                                       [](std::size_t v) { return v == 3 || v == 5; });
      v.note = "cut vertices: " + cuts;
      if (spec.rfind("cat:cvA", 0) == 0 && v.computed != "5")
        v.note += "; the supporting argument gives 5 for the cvA presentations";
    });
  }
  return check.take();
}

Verdicts check_t24(const VerifyConfig& c) {
  Check check("T2.4", c);
  for (std::uint64_t q : c.grids.field_orders) {
    const std::string spec = "prod:(Zn:2,GF:" + num(q) + ")";
    check.instance("ring=" + spec, [&] {
      FiniteRing ring = check.ring(spec);
      Graph g = build_zdgraph(ring);
      const std::size_t l = g.order();
      auto star = detail::star_centre(g);
      check.compare("shape", "K_{1," + num(l - 1) + "}",
                    star ? "K_{1," + num(star->second) + "}" : detail::shape_name(g));
      if (star) check.compare("centre", "(1,0)", g.label(star->first));
      check.compare_quantity("Dim_d", num(l - 1), dominant_metric_dimension(g, c.solver));
    });
  }
  for (const auto& spec : c.grids.t24_local_rings) {
    check.instance("local acyclic ring=" + spec, [&] {
      FiniteRing ring = check.ring(spec);
      if (!ring_properties(ring).is_local) return check.skip("Dim_d", "hypothesis fails: ring is not local");
      Graph g = build_zdgraph(ring);
      if (girth(g)) return check.skip("Dim_d", "hypothesis fails: graph has a cycle");
      std::string pattern;
      if (g.order() == 1) pattern = "single_vertex_convention";
      if (detail::is_path(g) && g.order() == 3) pattern = "p3_ddim";
      check.compare_quantity("Dim_d", "1", dominant_metric_dimension(g, c.solver), {}, pattern).note =
          "graph " + detail::shape_name(g);
    });
  }
  return check.take();
}

Verdicts check_t26(const VerifyConfig& c) {
  Check check("T2.6", c);
  for (std::uint64_t n = 2; n <= c.grids.t26_n_max; ++n) {
    check.instance("n=" + num(n), [&] {
      Table1Row row = detail::compute_table1_row(n, c.solver);
      if (row.shape_class == "UNSUPPORTED") return;
      if (row.ddim == "BUDGET_EXCEEDED") return check.skip("Dim_d", "budget exceeded");
      auto& v = check.compare("Dim_d (row " + row.shape_class + ")", row.claimed_ddim, row.ddim,
                              detail::table1_pattern(row));
      v.method = row.method;
      if (row.shape_class == "pq" && n % 2 == 0) v.note = "row covers odd p, q only; graph " + row.shape;
    });
  }
  return check.take();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> field_pairs(const VerifyGrids& g) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::size_t i = 0; i < g.field_orders.size(); ++i)
    for (std::size_t j = i; j < g.field_orders.size(); ++j)
      out.emplace_back(std::min(g.field_orders[i], g.field_orders[j]), std::max(g.field_orders[i], g.field_orders[j]));
  return out;
}

std::string gf_product(std::uint64_t a, std::uint64_t b) { return "prod:(GF:" + num(a) + ",GF:" + num(b) + ")"; }

Verdicts check_t2121(const VerifyConfig& c) {
  Check check("T2121", c);
  for (auto [q1, q2] : field_pairs(c.grids)) {
    check.instance("ring=" + gf_product(q1, q2), [&, q1 = q1, q2 = q2] {
      if (q1 < 3) return check.skip("Dim_d", "hypothesis fails: field orders must be >= 3");
      Graph g = build_zdgraph(check.ring(gf_product(q1, q2)));
      auto gr = girth(g);
      check.compare("shape", pair_shape(q1 - 1, q2 - 1), bipartite_or_shape(g));
      check.compare("girth", "4", detail::num_or_inf(gr));
      const std::string claimed = gr ? signed_num(static_cast<long long>(q1 + q2) - static_cast<long long>(*gr))
                                     : "undefined";
      check.compare_quantity("Dim_d", claimed, dominant_metric_dimension(g, c.solver)).note =
          "|K1| + |K2| - girth with computed girth";
    });
  }
  return check.take();
}

Verdicts check_t2122(const VerifyConfig& c) {
  Check check("T2122", c);
  for (auto [q1, q2] : field_pairs(c.grids)) {
    check.instance("ring=" + gf_product(q1, q2), [&, q1 = q1, q2 = q2] {
      FiniteRing ring = check.ring(gf_product(q1, q2));
      if (!ring_properties(ring).is_reduced) return check.skip("Dim_d", "hypothesis fails: ring not reduced");
      auto e1 = ring.find("(1,0)"), e2 = ring.find("(0,1)");
      if (!e1 || !e2) return check.skip("Dim_d", "idempotents (1,0), (0,1) not found");
      auto i1 = annihilator(ring, *e2), i2 = annihilator(ring, *e1);  // K1 x 0 and 0 x K2
      std::vector<Element> meet;
      std::set_intersection(i1.begin(), i1.end(), i2.begin(), i2.end(), std::back_inserter(meet));
      if (meet != std::vector<Element>{ring.zero()}) return check.skip("Dim_d", "hypothesis fails: I1 and I2 meet");

      Graph g = build_zdgraph(ring);
      auto parts = detail::complete_bipartite_parts(g);
      const auto n1 = i1.size(), n2 = i2.size();
      const bool minus_one = parts && *parts == std::pair{std::min(n1, n2) - 1, std::max(n1, n2) - 1};
      check.compare("shape", pair_shape(n1, n2), bipartite_or_shape(g), minus_one ? "bipartite_sides_minus_one" : "");
      const std::size_t omega = clique_number(g);
      check.compare("omega", "2", num(omega));
      const long long claimed = static_cast<long long>(n1 + n2) - 2 * static_cast<long long>(omega);
      check.compare_quantity("Dim_d", signed_num(claimed), dominant_metric_dimension(g, c.solver)).note =
          "|I1| + |I2| - 2 omega with |I1| = " + num(n1) + ", |I2| = " + num(n2);
    });
  }
  return check.take();
}

std::vector<std::string> l2121_rings(const VerifyConfig& c) {
  std::vector<std::string> rings;
  for (std::uint64_t n = 4; n <= c.grids.l2121_n_max; ++n)
    if (!is_prime(n)) rings.push_back("Zn:" + num(n));
  for (const char* s : {"Zni:2", "Zni:3", "Zni:5", "Zni:9"}) rings.emplace_back(s);
  for (auto [a, b] : field_pairs(c.grids)) rings.push_back(gf_product(a, b));
  for (std::uint64_t q : c.grids.field_orders) rings.push_back("prod:(Zn:2,GF:" + num(q) + ")");
  const Catalog& cat = c.catalog ? *c.catalog : Catalog::builtin();
  for (const auto& e : cat.entries()) rings.push_back("cat:" + e.id);
  return rings;
}

Verdicts check_l2121(const VerifyConfig& c) {
  Check check("L2121", c);
  for (const auto& spec : l2121_rings(c)) {
    check.instance("ring=" + spec, [&] {
      FiniteRing ring = check.ring(spec);
      if (zero_divisors(ring).empty()) return check.skip("Dim_d finite", "integral domain, empty graph");
      Graph g = build_zdgraph(ring);
      auto d = diameter(g);
      if (!d || *d > 2) return check.skip("Dim_d finite", "diameter " + detail::num_or_inf(d) + " > 2");
      QuantityResult r = dominant_metric_dimension(g, c.solver);
      if (!r.solved()) return void(check.add(detail::budget_skip("L2121", "", "Dim_d finite", r)));
      auto& v = check.compare("Dim_d finite", "finite", "finite");
      v.method = to_string(r.method);
      v.note = "sanity check; diameter " + num(*d) + ", Dim_d = " + num(r.value);
    });
  }
  return check.take();
}

Verdicts check_t2123(const VerifyConfig& c) {
  Check check("T2123", c);
  for (std::uint64_t p : c.grids.t2123_case1) {
    check.instance("case 1, p=" + num(p), [&] {
      if (!is_prime(p) || p % 4 != 3) return check.skip("Dim_d", "hypothesis fails: p prime, p = 3 mod 4");
      Graph g = build_zdgraph(check.ring("Zni:" + num(p * p)));
      check.compare("shape", "K_" + num(p * p - 1), complete_or_shape(g));
      check.compare_quantity("Dim_d", num(p * p - 2), dominant_metric_dimension(g, c.solver));
    });
  }
  for (auto [p1, p2] : c.grids.t2123_case2) {
    check.instance("case 2, (p1,p2)=(" + num(p1) + "," + num(p2) + ")", [&, p1 = p1, p2 = p2] {
      if (p1 == p2 || !is_prime(p1) || !is_prime(p2) || p1 % 4 != 3 || p2 % 4 != 3)
        return check.skip("Dim_d", "hypothesis fails: distinct primes = 3 mod 4");
      Graph g = build_zdgraph(check.ring("Zni:" + num(p1 * p2)));
      check.compare("shape", pair_shape(p1 * p1 - 1, p2 * p2 - 1), bipartite_or_shape(g));
      const std::size_t omega = clique_number(g);
      check.compare("omega", "2", num(omega));
      const long long claimed = static_cast<long long>(p1 * p1) - static_cast<long long>(p2 * p2) -
                                2 * static_cast<long long>(omega);
      const std::size_t corrected = p1 * p1 + p2 * p2 - 4;
      QuantityResult r = dominant_metric_dimension(g, c.solver);
      check.compare_quantity("Dim_d", signed_num(claimed), r, {},
                             r.solved() && r.value == corrected ? "case2_formula" : "")
          .note = "p1^2 - p2^2 - 2 omega with computed omega";
    });
  }
  for (std::uint64_t p : c.grids.t2123_case3) {
    check.instance("case 3, p=" + num(p), [&] {
      if (!is_prime(p) || p % 4 != 1) return check.skip("Dim_d", "hypothesis fails: p prime, p = 1 mod 4");
      Graph g = build_zdgraph(check.ring("Zni:" + num(p)));
      auto gr = girth(g);
      check.compare("shape", pair_shape(p - 1, p - 1), bipartite_or_shape(g));
      check.compare("girth", "2", detail::num_or_inf(gr), gr == 4u ? "case3_girth" : "");
      const std::string claimed = gr ? signed_num(2 * static_cast<long long>(p) - static_cast<long long>(*gr))
                                     : "undefined";
      check.compare_quantity("Dim_d", claimed, dominant_metric_dimension(g, c.solver)).note =
          "2p - girth with computed girth";
    });
  }
  return check.take();
}

std::string row_summary(const std::string& v, const std::string& e, const std::string& d, const std::string& gr,
                        const std::string& shape, const std::string& dd) {
  return "V=" + v + " E=" + e + " diam=" + d + " girth=" + gr + " shape=" + shape + " Dim_d=" + dd;
}

Verdicts check_tab1(const VerifyConfig& c) {
  Check check("TAB1", c);
  for (std::uint64_t n : c.grids.table1_n) {
    check.instance("n=" + num(n), [&] {
      auto rows = emit_table1({n}, c.solver);
      const Table1Row& r = rows.front();
      if (r.shape_class == "UNSUPPORTED") return check.skip("row", "n has no row");
      TheoremVerdict v;
      v.theorem_id = "TAB1";
      v.aspect = "row " + r.shape_class;
      v.claimed = row_summary(r.claimed_vertices, r.claimed_edges, r.claimed_diameter, r.claimed_girth,
                              r.claimed_shape, r.claimed_ddim);
      v.computed = row_summary(r.vertices, r.edges, r.diameter, r.girth, r.shape, r.ddim);
      v.status = r.status;
      v.erratum = r.erratum;
      v.method = r.method;
      check.add(std::move(v));
    });
  }
  return check.take();
}

Verdicts check_tab2(const VerifyConfig& c) {
  Check check("TAB2", c);
  check.instance("", [&] {
    for (auto& r : emit_table2(c.grids, c.solver, c.catalog)) {
      TheoremVerdict v;
      v.theorem_id = "TAB2";
      v.instance = "row " + std::to_string(r.row) + ", ring=" + r.ring;
      v.aspect = "dim and Dim_d";
      v.claimed = "dim=" + r.claimed + " Dim_d=" + r.claimed;
      v.computed = "dim=" + r.dim + " Dim_d=" + r.ddim;
      v.status = r.status;
      v.erratum = r.erratum;
      v.note = r.note;
      check.add(std::move(v));
    }
  });
  return check.take();
}

using CheckFn = Verdicts (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"R1", check_r1},       {"R2", check_r2},       {"R3", check_r3},       {"R4", check_r4},
      {"T1", check_t1},       {"T2", check_t2},       {"T3", check_t3},       {"T4", check_t4},
      {"T5", check_t5},       {"T6", check_t6},       {"P2.1", check_p21},    {"P2.2", check_p22},
      {"T2.1", check_t21},    {"T2.2", check_t22},    {"T2.3", check_t23},    {"T2.4", check_t24},
      {"T2.6", check_t26},    {"T2121", check_t2121}, {"T2122", check_t2122}, {"L2121", check_l2121},
      {"T2123", check_t2123}, {"TAB1", check_tab1},   {"TAB2", check_tab2},
  };
  return table;
}

CheckFn find_check(std::string_view id) {
  for (const auto& [name, fn] : registry())
    if (name == id) return fn;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& registry_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

VerifyConfig default_verify_config() {
  VerifyConfig c;
  c.checks = registry_ids();
  return c;
}

std::vector<TheoremVerdict> verify_theorem(std::string_view id, const VerifyConfig& config) {
  CheckFn fn = find_check(id);
  if (!fn) throw InvalidParamsError("unknown check id '" + std::string(id) + "'");
  return fn(config);
}

VerifyReport run_verify(const VerifyConfig& config) {
  for (const auto& id : config.checks)
    if (!find_check(id)) throw InvalidParamsError("unknown check id '" + id + "'");

  std::vector<Verdicts> parts(config.checks.size());
  if (config.parallel && config.checks.size() > 1) {
    std::vector<std::future<Verdicts>> jobs;
    for (const auto& id : config.checks)
      jobs.push_back(std::async(std::launch::async, [&config, id] { return verify_theorem(id, config); }));
    for (std::size_t i = 0; i < jobs.size(); ++i) parts[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < config.checks.size(); ++i) parts[i] = verify_theorem(config.checks[i], config);
  }

  VerifyReport report;
  std::set<std::string> hit;
  for (auto& part : parts) {
    for (auto& v : part) {
      switch (v.status) {
        case VerdictStatus::kPass:
          ++report.summary.pass;
          break;
        case VerdictStatus::kErratum:
          ++report.summary.erratum;
          hit.insert(v.erratum);
          break;
        case VerdictStatus::kFail:
          ++report.summary.fail;
          break;
        case VerdictStatus::kSkipped:
          ++report.summary.skipped;
          if (v.computed == "BUDGET_EXCEEDED") report.summary.budget_exceeded = true;
          break;
        case VerdictStatus::kInvalidInstance:
          ++report.summary.invalid;
          break;
      }
      report.verdicts.push_back(std::move(v));
    }
  }
  report.summary.errata_hit.assign(hit.begin(), hit.end());
  return report;
}

int exit_code(const VerifyReport& report) {
  if (report.summary.fail > 0) return 3;
  if (report.summary.budget_exceeded) return 4;
  return 0;
}

std::string report_json(const VerifyReport& report, bool deterministic) {
  nlohmann::ordered_json doc;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : report.verdicts) {
    nlohmann::ordered_json j;
    j["theorem_id"] = v.theorem_id;
    j["instance"] = v.instance;
    j["aspect"] = v.aspect;
    j["claimed"] = v.claimed;
    j["computed"] = v.computed;
    j["status"] = to_string(v.status);
    j["erratum"] = v.erratum.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v.erratum);
    j["method"] = v.method;
    j["note"] = v.note;
    j["elapsed_ms"] = deterministic ? 0.0 : v.elapsed_ms;
    verdicts.push_back(std::move(j));
  }
  const auto& s = report.summary;
  doc["verdicts"] = std::move(verdicts);
  doc["summary"] = {{"total", report.verdicts.size()},
                    {"pass", s.pass},
                    {"erratum", s.erratum},
                    {"fail", s.fail},
                    {"skipped", s.skipped},
                    {"invalid_instance", s.invalid},
                    {"budget_exceeded", s.budget_exceeded},
                    {"errata_hit", s.errata_hit}};
  auto ledger = nlohmann::ordered_json::array();
  for (const auto& e : errata_ledger()) {
    if (!std::binary_search(s.errata_hit.begin(), s.errata_hit.end(), e.id)) continue;
    ledger.push_back({{"id", e.id},
                      {"claimed", e.printed_claim},
                      {"computed", e.computed_truth},
                      {"explanation", e.explanation}});
  }
  doc["errata"] = std::move(ledger);
  return doc.dump(2) + "\n";
}

std::string report_text(const VerifyReport& report, bool deterministic) {
  std::ostringstream out;
  for (const auto& v : report.verdicts) {
    std::string status = to_string(v.status);
    if (!v.erratum.empty()) status += " " + v.erratum;
    out << status << "  " << v.theorem_id << "  " << v.instance;
    if (!v.aspect.empty()) out << "  [" << v.aspect << "]";
    if (!v.claimed.empty() || !v.computed.empty())
      out << "  claimed=" << v.claimed << "  computed=" << v.computed;
    if (!v.method.empty()) out << "  (" << v.method << ")";
    if (!v.note.empty()) out << "  -- " << v.note;
    if (!deterministic) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(2);
      ms << v.elapsed_ms;
      out << "  " << ms.str() << " ms";
    }
    out << "\n";
  }
  const auto& s = report.summary;
  out << "summary: " << report.verdicts.size() << " verdicts, " << s.pass << " PASS, " << s.erratum << " ERRATUM, "
      << s.fail << " FAIL, " << s.skipped << " SKIPPED, " << s.invalid << " INVALID_INSTANCE\n";
  out << "errata:";
  if (s.errata_hit.empty()) out << " none";
  for (const auto& id : s.errata_hit) out << " " << id;
  out << "\n";
  return out.str();
}

// --- configuration -------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(sep, start);
    if (end == std::string_view::npos) end = s.size();
    if (auto item = trim(s.substr(start, end - start)); !item.empty()) out.push_back(std::move(item));
    start = end + 1;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidParamsError("config key '" + key + "': bad integer '" + std::string(text) + "'");
  return v;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& key, std::string_view text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_u64(key, item));
  return out;
}

}  // namespace

VerifyConfig parse_verify_config(std::string_view text) {
  VerifyConfig config;
  VerifyGrids& g = config.grids;

  using Setter = std::function<void(const std::string&, const std::string&)>;
  auto size_key = [](std::size_t& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) { field = parse_u64(k, v); };
  };
  auto u64_key = [](std::uint64_t& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) { field = parse_u64(k, v); };
  };
  auto list_key = [](std::vector<std::uint64_t>& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) { field = parse_u64_list(k, v); };
  };
  auto ring_key = [](std::vector<std::string>& field) -> Setter {
    return [&field](const std::string&, const std::string& v) { field = split(v, ';'); };
  };

  const std::map<std::string, Setter> setters = {
      {"checks",
       [&](const std::string&, const std::string& v) {
         config.checks = split(v, ',');
         for (const auto& id : config.checks)
           if (!find_check(id)) throw InvalidParamsError("config: unknown check id '" + id + "'");
       }},
      {"budget_ms",
       [&](const std::string& k, const std::string& v) {
         config.solver.time_limit = std::chrono::milliseconds(parse_u64(k, v));
       }},
      {"max_nodes", u64_key(config.solver.max_nodes)},
      {"family_max", size_key(g.family_max)},
      {"complete_max", size_key(g.complete_max)},
      {"star_max", size_key(g.star_max)},
      {"bipartite_total_max", size_key(g.bipartite_total_max)},
      {"spot_max", size_key(g.spot_max)},
      {"t21_n_max", u64_key(g.t21_n_max)},
      {"t26_n_max", u64_key(g.t26_n_max)},
      {"l2121_n_max", u64_key(g.l2121_n_max)},
      {"table1_n", list_key(g.table1_n)},
      {"field_orders", list_key(g.field_orders)},
      {"t22_primes", list_key(g.t22_primes)},
      {"tab2_primes", list_key(g.tab2_primes)},
      {"t2123_case1", list_key(g.t2123_case1)},
      {"t2123_case3", list_key(g.t2123_case3)},
      {"t2123_case2",
       [&](const std::string& k, const std::string& v) {
         g.t2123_case2.clear();
         for (const auto& item : split(v, ',')) {
           auto x = item.find('x');
           if (x == std::string::npos) throw InvalidParamsError("config key '" + k + "': expected 'pxq'");
           g.t2123_case2.emplace_back(parse_u64(k, trim(item.substr(0, x))), parse_u64(k, trim(item.substr(x + 1))));
         }
       }},
      {"p21_rings", ring_key(g.p21_rings)},
      {"p22_rings", ring_key(g.p22_rings)},
      {"t22b_rings", ring_key(g.t22b_rings)},
      {"t23_rings", ring_key(g.t23_rings)},
      {"t24_local_rings", ring_key(g.t24_local_rings)},
  };

  std::size_t line_no = 0;
  for (const auto& raw : [&] {
         std::vector<std::string_view> lines;
         std::size_t pos = 0;
         while (pos <= text.size()) {
           auto end = text.find('\n', pos);
           if (end == std::string_view::npos) end = text.size();
           lines.push_back(text.substr(pos, end - pos));
           pos = end + 1;
         }
         return lines;
       }()) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InvalidParamsError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) throw InvalidParamsError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    it->second(key, value);
  }
  return config;
}

}  // namespace zdrlab

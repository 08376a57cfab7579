#include "verify_common.hpp"

#include <algorithm>

namespace zdrlab::detail {

bool is_path(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || !g.connected() || g.size() != n - 1) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_cycle(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || !g.connected()) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::optional<std::pair<Vertex, std::size_t>> star_centre(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() != n - 1) return std::nullopt;
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    return std::pair{c, n - 1};
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
  if (g.order() < 2 || !g.connected()) return std::nullopt;
  auto colour = two_coloring(g);
  if (!colour) return std::nullopt;
  const auto a = static_cast<std::size_t>(std::count(colour->begin(), colour->end(), 0));
  const std::size_t b = g.order() - a;
  if (g.size() != a * b) return std::nullopt;
  return std::pair{std::min(a, b), std::max(a, b)};
}

std::string shape_name(const Graph& g) {
  if (g.order() == 0) return "empty";
  if (g.order() == 1) return "K_1";
  if (is_path(g)) return "P_" + num(g.order());
  auto family = recognize_family(g);
  return family ? to_string(*family) : "unrecognized";
}

TheoremVerdict judge(std::string theorem, std::string instance, std::string aspect, std::string claimed,
                     std::string computed, bool match, const std::string& pattern) {
  TheoremVerdict v;
  v.theorem_id = std::move(theorem);
  v.instance = std::move(instance);
  v.aspect = std::move(aspect);
  v.claimed = std::move(claimed);
  v.computed = std::move(computed);
  if (match) {
    v.status = VerdictStatus::kPass;
  } else if (auto id = lookup_erratum(v.theorem_id, pattern); !id.empty()) {
    v.status = VerdictStatus::kErratum;
    v.erratum = id;
  } else {
    v.status = VerdictStatus::kFail;
    if (!pattern.empty()) v.note = "unexplained mismatch (" + pattern + ")";
  }
  return v;
}

TheoremVerdict skipped(std::string theorem, std::string instance, std::string aspect, std::string note) {
  TheoremVerdict v;
  v.theorem_id = std::move(theorem);
  v.instance = std::move(instance);
  v.aspect = std::move(aspect);
  v.status = VerdictStatus::kSkipped;
  v.note = std::move(note);
  return v;
}

TheoremVerdict budget_skip(std::string theorem, std::string instance, std::string aspect,
                           const QuantityResult& r) {
  auto v = skipped(std::move(theorem), std::move(instance), std::move(aspect),
                   "budget exceeded after " + std::to_string(r.nodes) + " nodes");
  v.computed = "BUDGET_EXCEEDED";
  v.method = to_string(r.method);
  return v;
}

BuildOptions build_options(const Catalog* catalog) {
  BuildOptions opts;
  opts.catalog = catalog;
  return opts;
}

}  // namespace zdrlab::detail

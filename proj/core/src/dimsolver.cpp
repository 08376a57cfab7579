#include "zdrlab/dimsolver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "zdrlab/errors.hpp"

namespace zdrlab {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::kGamma:
      return "gamma";
    case Quantity::kDim:
      return "dim";
    case Quantity::kDdim:
      return "ddim";
  }
  return "?";
}

std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::kExhaustive:
      return "exhaustive";
    case SolveMethod::kTwinReduced:
      return "twin_reduced";
    case SolveMethod::kClosedForm:
      return "closed_form";
    case SolveMethod::kConvention:
      return "convention";
  }
  return "?";
}

std::string to_string(SolveStatus s) {
  return s == SolveStatus::kSolved ? "SOLVED" : "BUDGET_EXCEEDED";
}

namespace {

void check_vertices(const Graph& g, std::span<const Vertex> set) {
  for (Vertex v : set)
    if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
}

bool resolves(const Graph& g, std::span<const Vertex> set) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  if (set.empty()) return false;
  std::vector<Vertex> idx(n);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  auto less = [&](Vertex a, Vertex b) {
    for (Vertex w : set) {
      auto da = g.distance(a, w), db = g.distance(b, w);
      if (da != db) return da < db;
    }
    return false;
  };
  std::sort(idx.begin(), idx.end(), less);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!less(idx[i], idx[i + 1])) return false;
  return true;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct BudgetExhausted {};

// Lexicographic k-subset enumeration with twin and coverage pruning.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, bool need_dominating, bool need_resolving, const TwinPartition& twins,
               const SolverOptions& options, Clock::time_point start)
      : g_(g),
        n_(g.order()),
        need_dom_(need_dominating),
        need_res_(need_resolving),
        twins_(twins),
        options_(options),
        start_(start) {
    if (need_dom_) {
      by_deadline_.assign(n_, {});
      for (Vertex v = 0; v < n_; ++v) {
        std::size_t last = v;
        if (!g_.neighbor_list(v).empty()) last = std::max<std::size_t>(last, g_.neighbor_list(v).back());
        by_deadline_[last].push_back(v);
      }
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  /// Lexicographically least valid k-subset, or nullopt. Throws BudgetExhausted.
  std::optional<std::vector<Vertex>> find(std::size_t k) {
    k_ = k;
    chosen_.clear();
    covered_.assign(n_, 0);
    const std::size_t classes = twins_.classes.size();
    remaining_.assign(classes, 0);
    excluded_.assign(classes, 0);
    for (std::size_t c = 0; c < classes; ++c) remaining_[c] = twins_.classes[c].size();
    forced_ = 0;
    if (need_res_)
      for (std::size_t c = 0; c < classes; ++c) forced_ += remaining_[c] - 1;
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  std::size_t forced_term(std::size_t c) const {
    const std::size_t allow = excluded_[c] ? 0 : 1;
    return remaining_[c] > allow ? remaining_[c] - allow : 0;
  }

  void tick() {
    ++nodes_;
    if (options_.max_nodes != 0 && nodes_ > options_.max_nodes) throw BudgetExhausted{};
    if (options_.time_limit.count() > 0 && (nodes_ & 1023) == 0 &&
        Clock::now() - start_ > options_.time_limit)
      throw BudgetExhausted{};
  }

  void cover(Vertex v, int delta) {
    covered_[v] += delta;
    for (Vertex u : g_.neighbor_list(v)) covered_[u] += delta;
  }

  bool deadlines_met(std::size_t pos) const {
    if (!need_dom_) return true;
    for (Vertex u : by_deadline_[pos])
      if (covered_[u] == 0) return false;
    return true;
  }

  bool leaf_ok() const {
    if (need_dom_)
      for (Vertex v = 0; v < n_; ++v)
        if (covered_[v] == 0) return false;
    if (need_res_ && !resolves(g_, chosen_)) return false;
    return true;
  }

  bool dfs(std::size_t pos) {
    tick();
    const std::size_t still_needed = k_ - chosen_.size();
    if (still_needed == 0) return (!need_res_ || forced_ == 0) && leaf_ok();
    if (n_ - pos < still_needed) return false;
    if (need_res_ && forced_ > still_needed) return false;

    const auto v = static_cast<Vertex>(pos);
    const std::size_t c = twins_.class_of[v];

    // Include v.
    {
      const std::size_t before = need_res_ ? forced_term(c) : 0;
      chosen_.push_back(v);
      if (need_dom_) cover(v, +1);
      --remaining_[c];
      if (need_res_) forced_ = forced_ - before + forced_term(c);
      const bool ok = deadlines_met(pos) && dfs(pos + 1);
      if (ok) return true;
      if (need_res_) forced_ = forced_ - forced_term(c);
      ++remaining_[c];
      if (need_res_) forced_ += before;
      if (need_dom_) cover(v, -1);
      chosen_.pop_back();
    }
    // Exclude v: at most one member of a twin class may stay outside.
    if (!need_res_ || excluded_[c] == 0) {
      const std::size_t before = need_res_ ? forced_term(c) : 0;
      excluded_[c] = 1;
      --remaining_[c];
      if (need_res_) forced_ = forced_ - before + forced_term(c);
      const bool ok = deadlines_met(pos) && dfs(pos + 1);
      if (ok) return true;
      if (need_res_) forced_ = forced_ - forced_term(c);
      ++remaining_[c];
      excluded_[c] = 0;
      if (need_res_) forced_ += before;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  bool need_dom_;
  bool need_res_;
  const TwinPartition& twins_;
  const SolverOptions& options_;
  Clock::time_point start_;

  std::vector<std::vector<Vertex>> by_deadline_;
  std::size_t k_ = 0;
  std::vector<Vertex> chosen_;
  std::vector<int> covered_;
  std::vector<std::size_t> remaining_;
  std::vector<std::uint8_t> excluded_;
  std::size_t forced_ = 0;
  std::uint64_t nodes_ = 0;
};

TwinPartition singleton_partition(std::size_t n) {
  TwinPartition p;
  p.class_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    p.classes.push_back({static_cast<Vertex>(v)});
    p.class_of[v] = v;
  }
  return p;
}

QuantityResult run_search(const Graph& g, Quantity q, bool need_dom, bool need_res, const TwinPartition& twins,
                          std::size_t lower_bound, SolveMethod method, const SolverOptions& options) {
  const auto start = Clock::now();
  QuantityResult r;
  r.quantity = q;
  r.method = method;
  r.lower_bound = lower_bound;
  SubsetSearch search(g, need_dom, need_res, twins, options, start);
  try {
    for (std::size_t k = lower_bound; k <= g.order(); ++k) {
      if (auto w = search.find(k)) {
        r.value = k;
        r.witness = std::move(*w);
        break;
      }
    }
  } catch (const BudgetExhausted&) {
    r.status = SolveStatus::kBudgetExceeded;
  }
  r.nodes = search.nodes();
  r.elapsed_ms = ms_since(start);
  return r;
}

void require_nonempty(const Graph& g) {
  if (g.empty()) throw EmptyGraphError("graph has no vertices");
}

void require_connected(const Graph& g) {
  require_nonempty(g);
  if (!g.connected()) throw DisconnectedGraphError("metric quantities need a connected graph");
}

}  // namespace

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
  check_vertices(g, set);
  DynamicBitset covered(g.order());
  for (Vertex v : set) {
    covered.set(v);
    covered |= g.neighbors(v);
  }
  return covered.count() == g.order();
}

bool is_resolving(const Graph& g, std::span<const Vertex> set) {
  check_vertices(g, set);
  return resolves(g, set);
}

std::size_t TwinPartition::resolving_lower_bound() const {
  std::size_t s = 0;
  for (const auto& c : classes) s += c.size() - 1;
  return s;
}

bool TwinPartition::has_nontrivial_class() const {
  return std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() > 1; });
}

TwinPartition twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  // Twins share either their open neighbourhood (non-adjacent) or their
  // closed neighbourhood (adjacent); no vertex has nontrivial twins of both kinds.
  std::map<DynamicBitset, std::vector<Vertex>> open, closed;
  for (Vertex v = 0; v < n; ++v) {
    open[g.neighbors(v)].push_back(v);
    DynamicBitset c = g.neighbors(v);
    c.set(v);
    closed[c].push_back(v);
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> group(n, kNone);
  std::vector<std::vector<Vertex>> groups;
  for (auto* table : {&open, &closed})
    for (auto& [key, members] : *table) {
      if (members.size() < 2) continue;
      for (Vertex v : members)
        if (group[v] != kNone) throw std::logic_error("twin_classes: vertex has open and closed twins");
      for (Vertex v : members) group[v] = groups.size();
      groups.push_back(members);
    }
  for (Vertex v = 0; v < n; ++v)
    if (group[v] == kNone) {
      group[v] = groups.size();
      groups.push_back({v});
    }

  // Verify against the distance definition.
  for (const auto& members : groups) {
    const Vertex rep = members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
      const Vertex v = members[i];
      for (Vertex x = 0; x < n; ++x) {
        if (x == rep || x == v) continue;
        if (g.distance(rep, x) != g.distance(v, x)) throw std::logic_error("twin_classes: distance check failed");
      }
    }
  }

  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  TwinPartition p;
  p.class_of.resize(n);
  for (std::size_t c = 0; c < groups.size(); ++c)
    for (Vertex v : groups[c]) p.class_of[v] = c;
  p.classes = std::move(groups);
  return p;
}

std::size_t search_lower_bound(const Graph& g, Quantity q) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  const std::size_t dom_bound = ceil_div(n, max_degree(g) + 1);
  switch (q) {
    case Quantity::kGamma:
      return dom_bound;
    case Quantity::kDim: {
      std::size_t b = twin_classes(g).resolving_lower_bound();
      return n >= 2 ? std::max<std::size_t>(b, 1) : b;
    }
    case Quantity::kDdim:
      if (n == 1) return 0;
      return std::max(twin_classes(g).resolving_lower_bound(), dom_bound);
  }
  return 0;
}

QuantityResult domination_number(const Graph& g, const SolverOptions& options) {
  require_nonempty(g);
  TwinPartition trivial = singleton_partition(g.order());
  return run_search(g, Quantity::kGamma, true, false, trivial, search_lower_bound(g, Quantity::kGamma),
                    SolveMethod::kExhaustive, options);
}

QuantityResult metric_dimension(const Graph& g, const SolverOptions& options) {
  require_connected(g);
  TwinPartition twins = twin_classes(g);
  const SolveMethod method = twins.has_nontrivial_class() ? SolveMethod::kTwinReduced : SolveMethod::kExhaustive;
  std::size_t lb = twins.resolving_lower_bound();
  if (g.order() >= 2) lb = std::max<std::size_t>(lb, 1);
  return run_search(g, Quantity::kDim, false, true, twins, lb, method, options);
}

QuantityResult dominant_metric_dimension(const Graph& g, const SolverOptions& options,
                                         std::size_t known_lower_bound) {
  require_connected(g);
  if (g.order() == 1) {
    QuantityResult r;
    r.quantity = Quantity::kDdim;
    r.method = SolveMethod::kConvention;
    return r;
  }
  TwinPartition twins = twin_classes(g);
  const SolveMethod method = twins.has_nontrivial_class() ? SolveMethod::kTwinReduced : SolveMethod::kExhaustive;
  const std::size_t dom_bound = ceil_div(g.order(), max_degree(g) + 1);
  const std::size_t lb = std::max({twins.resolving_lower_bound(), dom_bound, known_lower_bound});
  return run_search(g, Quantity::kDdim, true, true, twins, lb, method, options);
}

std::optional<QuantityResult> certify_by_lower_bound(const Graph& g, Quantity q, std::span<const Vertex> witness) {
  require_nonempty(g);
  if (q != Quantity::kGamma) require_connected(g);
  const auto start = Clock::now();
  std::vector<Vertex> w(witness.begin(), witness.end());
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) return std::nullopt;
  const bool dom_needed = q != Quantity::kDim;
  const bool res_needed = q != Quantity::kGamma;
  if (dom_needed && !is_dominating(g, w)) return std::nullopt;
  if (res_needed && !is_resolving(g, w)) return std::nullopt;
  const std::size_t lb = search_lower_bound(g, q);
  if (w.size() != lb) return std::nullopt;
  QuantityResult r;
  r.quantity = q;
  r.value = lb;
  r.lower_bound = lb;
  r.witness = std::move(w);
  r.method = SolveMethod::kClosedForm;
  r.elapsed_ms = ms_since(start);
  return r;
}

bool DimensionReport::all_solved() const {
  for (const auto* r : {&gamma, &dim, &ddim})
    if (r->has_value() && !(*r)->solved()) return false;
  return true;
}

DimensionReport solve_dimensions(const Graph& g, Which which, const SolverOptions& options) {
  DimensionReport report;
  if (which.gamma) report.gamma = domination_number(g, options);
  if (which.dim) report.dim = metric_dimension(g, options);
  if (which.ddim) {
    std::size_t known = 0;
    if (report.gamma && report.gamma->solved()) known = std::max(known, report.gamma->value);
    if (report.dim && report.dim->solved()) known = std::max(known, report.dim->value);
    report.ddim = dominant_metric_dimension(g, options, known);
  }
  return report;
}

}  // namespace zdrlab

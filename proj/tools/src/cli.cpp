#include "zdrlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zdrlab/catalog.hpp"
#include "zdrlab/dimsolver.hpp"
#include "zdrlab/errors.hpp"
#include "zdrlab/graph.hpp"
#include "zdrlab/ring.hpp"
#include "zdrlab/verify.hpp"

namespace zdrlab {
namespace {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct BudgetFlags {
  std::optional<std::uint64_t> budget_ms;
  std::uint64_t max_nodes = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-ms", budget_ms, "Time cap per solve in milliseconds (default: $ZDRLAB_BUDGET_MS)");
    cmd->add_option("--max-nodes", max_nodes, "Search-node cap per solve (0 = none)");
  }

  SolverOptions options() const {
    SolverOptions o;
    o.max_nodes = max_nodes;
    std::optional<std::uint64_t> ms = budget_ms;
    if (!ms) {
      if (const char* env = std::getenv("ZDRLAB_BUDGET_MS"); env && *env) {
        try {
          ms = std::stoull(env);
        } catch (const std::exception&) {
          throw InputError(std::string("ZDRLAB_BUDGET_MS is not an integer: '") + env + "'");
        }
      }
    }
    if (ms) o.time_limit = std::chrono::milliseconds(*ms);
    return o;
  }
};

// --- ring describe ---------------------------------------------------------------

int ring_describe(const std::string& spec_text, std::uint64_t max_order, const std::string& format, std::ostream& out) {
  BuildOptions opts;
  opts.max_order = max_order;
  FiniteRing ring = build_ring(spec_text, opts);
  RingProps props = ring_properties(ring);
  ZeroDivisorSet zd = zero_divisors(ring);

  auto labels_of = [&](const std::vector<Element>& xs) {
    std::vector<std::string> out_labels;
    for (Element x : xs) out_labels.push_back(ring.label(x));
    return out_labels;
  };

  if (format == "json") {
    json doc;
    doc["spec"] = to_string(ring.spec());
    doc["order"] = ring.order();
    doc["properties"] = {{"field", props.is_field},
                         {"integral_domain", props.is_integral_domain},
                         {"local", props.is_local},
                         {"reduced", props.is_reduced}};
    doc["units"] = props.units.size();
    doc["nilpotents"] = labels_of(props.nilpotents);
    doc["zero_divisors"] = labels_of(zd.members);
    doc["labels"] = ring.labels();
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "ring:            " << to_string(ring.spec()) << "\n"
      << "order:           " << ring.order() << "\n"
      << "field:           " << yes(props.is_field) << "\n"
      << "integral domain: " << yes(props.is_integral_domain) << "\n"
      << "local:           " << yes(props.is_local) << "\n"
      << "reduced:         " << yes(props.is_reduced) << "\n"
      << "units:           " << props.units.size() << "\n"
      << "nilpotents:      {" << join(labels_of(props.nilpotents)) << "}\n"
      << "L(R):            " << (zd.empty() ? "empty" : "{" + join(labels_of(zd.members)) + "}") << " ("
      << zd.size() << " elements)\n"
      << "labels:          " << join(ring.labels()) << "\n";
  return kExitOk;
}

// --- graph build -----------------------------------------------------------------

int graph_build(const std::string& spec_text, std::uint64_t max_order, const std::string& format, std::ostream& out) {
  auto fmt = parse_export_format(format);
  if (!fmt) throw InputError("unknown graph format '" + format + "'");
  BuildOptions opts;
  opts.max_order = max_order;
  out << export_graph(build_zdgraph(build_ring(spec_text, opts)), *fmt);
  return kExitOk;
}

// --- dims solve ------------------------------------------------------------------

json quantity_json(const Graph& g, const QuantityResult& r, bool deterministic) {
  std::vector<std::string> witness;
  for (Vertex v : r.witness) witness.push_back(g.label(v));
  json j;
  j["status"] = to_string(r.status);
  j["value"] = r.solved() ? json(r.value) : json(nullptr);
  j["witness"] = witness;
  j["method"] = to_string(r.method);
  j["lower_bound"] = r.lower_bound;
  j["nodes"] = r.nodes;
  j["elapsed_ms"] = deterministic ? 0.0 : r.elapsed_ms;
  return j;
}

void quantity_text(std::ostream& out, const std::string& name, const Graph& g, const QuantityResult& r,
                   bool deterministic) {
  out << name << ": ";
  if (r.solved()) {
    out << r.value << "  witness {";
    for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ", " : "") << g.label(r.witness[i]);
    out << "}";
  } else {
    out << "BUDGET_EXCEEDED  (lower bound " << r.lower_bound << ")";
  }
  out << "  method " << to_string(r.method) << "  nodes " << r.nodes;
  if (!deterministic) out << "  " << r.elapsed_ms << " ms";
  out << "\n";
}

int dims_solve(const std::string& spec_text, const std::string& graph_file, std::uint64_t max_order,
               const std::string& which_text, const std::string& format, bool deterministic,
               const SolverOptions& solver, std::ostream& out) {
  std::optional<Graph> g;
  std::string source;
  if (!graph_file.empty()) {
    try {
      g = parse_edgelist(read_file(graph_file));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    source = graph_file;
  } else {
    BuildOptions opts;
    opts.max_order = max_order;
    g = build_zdgraph(build_ring(spec_text, opts));
    source = spec_text;
  }
  if (g->empty()) throw InputError("graph has no vertices");

  Which which{which_text == "all" || which_text == "gamma", which_text == "all" || which_text == "dim",
              which_text == "all" || which_text == "ddim"};
  if ((which.dim || which.ddim) && !g->connected())
    throw InputError("graph is disconnected; dim and Dim_d need a connected graph");
  DimensionReport rep = solve_dimensions(*g, which, solver);

  if (format == "json") {
    json doc;
    doc["source"] = source;
    doc["order"] = g->order();
    doc["size"] = g->size();
    if (rep.gamma) doc["gamma"] = quantity_json(*g, *rep.gamma, deterministic);
    if (rep.dim) doc["dim"] = quantity_json(*g, *rep.dim, deterministic);
    if (rep.ddim) doc["ddim"] = quantity_json(*g, *rep.ddim, deterministic);
    out << doc.dump(2) << "\n";
  } else {
    out << "graph: " << source << "  order " << g->order() << "  size " << g->size() << "\n";
    if (rep.gamma) quantity_text(out, "gamma", *g, *rep.gamma, deterministic);
    if (rep.dim) quantity_text(out, "dim", *g, *rep.dim, deterministic);
    if (rep.ddim) quantity_text(out, "ddim", *g, *rep.ddim, deterministic);
  }
  return rep.all_solved() ? kExitOk : kExitBudgetExceeded;
}

// --- verify / tables -------------------------------------------------------------

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) ids.push_back(item);
  }
  return ids;
}

int verify_run(const std::string& config_path, const std::string& only, const std::string& format,
               bool deterministic, bool sequential, const BudgetFlags& budget, std::ostream& out) {
  VerifyConfig config = config_path.empty() ? default_verify_config() : parse_verify_config(read_file(config_path));
  if (!only.empty()) config.checks = split_ids(only);
  if (budget.budget_ms || budget.max_nodes || std::getenv("ZDRLAB_BUDGET_MS")) config.solver = budget.options();
  config.parallel = !sequential;
  VerifyReport report = run_verify(config);
  out << (format == "json" ? report_json(report, deterministic) : report_text(report, deterministic));
  return exit_code(report);
}

int table_emit(const std::string& which, const std::vector<std::uint64_t>& n_list, const std::string& format,
               const SolverOptions& solver, std::ostream& out) {
  const bool csv = format == "csv";
  if (which == "table1") {
    auto rows = emit_table1(n_list.empty() ? VerifyGrids{}.table1_n : n_list, solver);
    out << (csv ? render_table1_csv(rows) : render_table1_text(rows));
    for (const auto& r : rows)
      if (r.ddim == "BUDGET_EXCEEDED") return kExitBudgetExceeded;
    return kExitOk;
  }
  auto rows = emit_table2(VerifyGrids{}, solver);
  out << (csv ? render_table2_csv(rows) : render_table2_text(rows));
  for (const auto& r : rows)
    if (r.status == VerdictStatus::kSkipped) return kExitBudgetExceeded;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-divisor graph workbench: rings, graphs, gamma / dim / Dim_d and claim audits", "zdrlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zdrlab 0.1.0");

  std::uint64_t max_order = 4096;
  std::string format;

  // ring describe
  auto* ring = app.add_subcommand("ring", "Finite ring operations")->require_subcommand(1);
  auto* describe = ring->add_subcommand("describe", "Order, properties, L(R) and element labels");
  std::string spec_text;
  std::string ring_format = "text";
  describe->add_option("spec", spec_text, "Ring spec, e.g. Zn:12, Zni:5, GF:9, prod:(Zn:2,GF:4), cat:cvA1")
      ->required();
  describe->add_option("--format", ring_format)->check(CLI::IsMember({"text", "json"}));
  describe->add_option("--max-order", max_order, "Largest ring order accepted");

  // graph build
  auto* graph = app.add_subcommand("graph", "Zero-divisor graph operations")->require_subcommand(1);
  auto* build = graph->add_subcommand("build", "Build and export the zero-divisor graph");
  std::string graph_format = "dot";
  build->add_option("spec", spec_text, "Ring spec")->required();
  build->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "edgelist", "json"}));
  build->add_option("--max-order", max_order, "Largest ring order accepted");

  // dims solve
  auto* dims = app.add_subcommand("dims", "Exact gamma, dim and Dim_d")->require_subcommand(1);
  auto* solve = dims->add_subcommand("solve", "Solve for a ring's zero-divisor graph or an edge-list file");
  std::string graph_file, which = "all", dims_format = "text";
  bool deterministic = false;
  BudgetFlags dims_budget;
  auto* spec_opt = solve->add_option("spec", spec_text, "Ring spec");
  auto* file_opt = solve->add_option("--graph", graph_file, "Edge-list file (zdrlab edge list format)");
  spec_opt->excludes(file_opt);
  solve->add_option("--which", which)->check(CLI::IsMember({"gamma", "dim", "ddim", "all"}));
  solve->add_option("--format", dims_format)->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--deterministic", deterministic, "Zero all timing fields");
  solve->add_option("--max-order", max_order, "Largest ring order accepted");
  dims_budget.attach(solve);

  // verify run
  auto* verify = app.add_subcommand("verify", "Audit the registered claims")->require_subcommand(1);
  auto* vrun = verify->add_subcommand("run", "Run the check suite");
  std::string config_path, only, verify_format = "text";
  bool sequential = false;
  BudgetFlags verify_budget;
  vrun->add_option("--config", config_path, "Suite configuration file");
  vrun->add_option("--only", only, "Comma-separated check ids");
  vrun->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  vrun->add_flag("--deterministic", deterministic, "Zero all timing fields");
  vrun->add_flag("--sequential", sequential, "Run checks one after another");
  verify_budget.attach(vrun);

  // table emit
  auto* table = app.add_subcommand("table", "Reproduce the Z_n and ring tables")->require_subcommand(1);
  auto* emit = table->add_subcommand("emit", "Emit a table as CSV or aligned text");
  std::string table_name, table_format = "csv";
  std::vector<std::uint64_t> n_list;
  BudgetFlags table_budget;
  emit->add_option("table", table_name)->required()->check(CLI::IsMember({"table1", "table2"}));
  emit->add_option("--n", n_list, "Values of n for table1")->delimiter(',');
  emit->add_option("--format", table_format)->check(CLI::IsMember({"csv", "text"}));
  table_budget.attach(emit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*describe) return ring_describe(spec_text, max_order, ring_format, out);
    if (*build) return graph_build(spec_text, max_order, graph_format, out);
    if (*solve) {
      if (spec_text.empty() && graph_file.empty()) throw InputError("dims solve needs a ring spec or --graph FILE");
      return dims_solve(spec_text, graph_file, max_order, which, dims_format, deterministic, dims_budget.options(),
                        out);
    }
    if (*vrun) return verify_run(config_path, only, verify_format, deterministic, sequential, verify_budget, out);
    if (*emit) return table_emit(table_name, n_list, table_format, table_budget.options(), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace zdrlab

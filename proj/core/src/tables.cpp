#include <algorithm>
#include <sstream>

#include "verify_common.hpp"
#include "zdrlab/errors.hpp"

namespace zdrlab {

using detail::num;

namespace {

struct Factor2 {
  std::uint64_t p = 0, q = 0;
};

std::optional<Factor2> distinct_prime_pair(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    const std::uint64_t q = n / p;
    if (q != p && is_prime(p) && is_prime(q)) return Factor2{p, q};
    return std::nullopt;
  }
  return std::nullopt;
}

std::string classify(std::uint64_t n) {
  if (n < 2) return "UNSUPPORTED";
  if (is_prime(n)) return "p";
  if (n == 4) return "2^2";
  if (n == 8) return "2^3";
  if (n == 9) return "3^2";
  if (auto pp = as_prime_power(n); pp && pp->exponent == 2 && pp->prime >= 5) return "p^2";
  if (distinct_prime_pair(n)) return "pq";
  return "UNSUPPORTED";
}

void fill_claims(Table1Row& row) {
  const std::uint64_t n = row.n;
  const std::string& c = row.shape_class;
  if (c == "p") {
    row.claimed_vertices = "0", row.claimed_edges = "0", row.claimed_diameter = "0";
    row.claimed_girth = "inf", row.claimed_shape = "empty", row.claimed_ddim = "undefined";
  } else if (c == "2^2") {
    row.claimed_vertices = "1", row.claimed_edges = "0", row.claimed_diameter = "0";
    row.claimed_girth = "inf", row.claimed_shape = "K_1", row.claimed_ddim = "0";
  } else if (c == "3^2") {
    row.claimed_vertices = "2", row.claimed_edges = "1", row.claimed_diameter = "1";
    row.claimed_girth = "inf", row.claimed_shape = "P_2", row.claimed_ddim = "1";
  } else if (c == "2^3") {
    row.claimed_vertices = "3", row.claimed_edges = "2", row.claimed_diameter = "2";
    row.claimed_girth = "inf", row.claimed_shape = "P_3", row.claimed_ddim = "1";
  } else if (c == "p^2") {
    const std::uint64_t p = as_prime_power(n)->prime;
    row.claimed_vertices = num(p - 1), row.claimed_edges = num((p - 1) * (p - 2) / 2);
    row.claimed_diameter = "1", row.claimed_girth = "3";
    row.claimed_shape = "K_" + num(p - 1), row.claimed_ddim = num(p - 2);
  } else if (c == "pq") {
    auto [p, q] = *distinct_prime_pair(n);
    const std::uint64_t a = std::min(p, q) - 1, b = std::max(p, q) - 1;
    row.claimed_vertices = num(p + q - 2), row.claimed_edges = num((p - 1) * (q - 1));
    row.claimed_diameter = "2", row.claimed_girth = "4";
    row.claimed_shape = "K_{" + num(a) + "," + num(b) + "}";
    row.claimed_ddim = num(p + q - 4);
  }
}

}  // namespace

namespace detail {

Table1Row compute_table1_row(std::uint64_t n, const SolverOptions& solver) {
  Table1Row row;
  row.n = n;
  row.shape_class = classify(n);
  if (row.shape_class == "UNSUPPORTED") {
    row.status = VerdictStatus::kSkipped;
    return row;
  }
  fill_claims(row);

  FiniteRing ring = build_ring(RingSpec::zn(n));
  if (zero_divisors(ring).empty()) {
    row.vertices = "0", row.edges = "0", row.diameter = "0", row.girth = "inf";
    row.shape = "empty", row.ddim = "undefined";
    return row;
  }
  Graph g = build_zdgraph(ring);
  row.vertices = num(g.order());
  row.edges = num(g.size());
  row.diameter = detail::num_or_inf(diameter(g));
  row.girth = detail::num_or_inf(girth(g));
  row.shape = shape_name(g);
  QuantityResult r = dominant_metric_dimension(g, solver);
  row.method = to_string(r.method);
  row.ddim = r.solved() ? num(r.value) : "BUDGET_EXCEEDED";
  return row;
}

std::string table1_pattern(const Table1Row& row) {
  if (row.shape_class == "2^3" && row.shape == "P_3") return "p3_ddim";
  if (row.shape_class == "pq" && row.n % 2 == 0) return "pq_with_2";
  return {};
}

}  // namespace detail

std::vector<Table1Row> emit_table1(const std::vector<std::uint64_t>& n_list, const SolverOptions& solver) {
  std::vector<Table1Row> rows;
  rows.reserve(n_list.size());
  for (std::uint64_t n : n_list) {
    Table1Row row = detail::compute_table1_row(n, solver);
    if (row.shape_class != "UNSUPPORTED") {
      if (row.ddim == "BUDGET_EXCEEDED") {
        row.status = VerdictStatus::kSkipped;
      } else {
        const bool match = row.vertices == row.claimed_vertices && row.edges == row.claimed_edges &&
                           row.diameter == row.claimed_diameter && row.girth == row.claimed_girth &&
                           row.shape == row.claimed_shape && row.ddim == row.claimed_ddim;
        auto v = detail::judge("TAB1", "", "", "", "", match, detail::table1_pattern(row));
        row.status = v.status;
        row.erratum = v.erratum;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_field(cells[i]);
  }
  return line + "\n";
}

std::string aligned(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> width;
  for (const auto& r : table) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream out;
  for (const auto& r : table) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

std::string status_cell(VerdictStatus s, const std::string& erratum) {
  if (s == VerdictStatus::kErratum) return "ERRATUM " + erratum;
  return to_string(s);
}

std::vector<std::vector<std::string>> table1_cells(const std::vector<Table1Row>& rows) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"n", "class", "V", "E", "diameter", "girth", "shape", "claimed_ddim", "computed_ddim",
                 "status"});
  for (const auto& r : rows) {
    if (r.shape_class == "UNSUPPORTED") {
      out.push_back({num(r.n), r.shape_class, "", "", "", "", "", "", "", "UNSUPPORTED"});
      continue;
    }
    out.push_back({num(r.n), r.shape_class, r.vertices, r.edges, r.diameter, r.girth, r.shape, r.claimed_ddim,
                   r.ddim, status_cell(r.status, r.erratum)});
  }
  return out;
}

}  // namespace

std::string render_table1_csv(const std::vector<Table1Row>& rows) {
  std::string out;
  for (const auto& cells : table1_cells(rows)) out += csv_line(cells);
  return out;
}

std::string render_table1_text(const std::vector<Table1Row>& rows) { return aligned(table1_cells(rows)); }

std::vector<Table2Row> emit_table2(const VerifyGrids& grids, const SolverOptions& solver, const Catalog* catalog) {
  std::vector<std::pair<int, std::string>> rings;
  std::vector<std::string> claims;
  for (const auto& s : grids.p21_rings) rings.emplace_back(1, s), claims.push_back("1");
  for (const auto& s : grids.p22_rings) rings.emplace_back(2, s), claims.push_back("2");
  for (std::size_t i = 0; i < grids.field_orders.size(); ++i) {
    for (std::size_t j = i; j < grids.field_orders.size(); ++j) {
      const std::uint64_t a = std::min(grids.field_orders[i], grids.field_orders[j]);
      const std::uint64_t b = std::max(grids.field_orders[i], grids.field_orders[j]);
      rings.emplace_back(3, "prod:(GF:" + num(a) + ",GF:" + num(b) + ")");
      claims.push_back(num(a + b - 4));
    }
  }
  for (std::uint64_t p : grids.tab2_primes) {
    rings.emplace_back(4, "cat:Zpr.r2:" + num(p)), claims.push_back(num(p - 2));
    rings.emplace_back(4, "Zn:" + num(p * p)), claims.push_back(num(p - 2));
  }

  std::vector<Table2Row> rows;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    Table2Row row;
    row.row = rings[i].first;
    row.ring = rings[i].second;
    row.claimed = claims[i];
    try {
      Graph g = build_zdgraph(build_ring(row.ring, detail::build_options(catalog)));
      Which which;
      which.gamma = false;
      DimensionReport rep = solve_dimensions(g, which, solver);
      if (!rep.all_solved()) {
        row.status = VerdictStatus::kSkipped;
        row.note = "budget exceeded";
        rows.push_back(std::move(row));
        continue;
      }
      row.dim = num(rep.dim->value);
      row.ddim = num(rep.ddim->value);
      const bool match = row.dim == row.claimed && row.ddim == row.claimed;
      auto v = detail::judge("TAB2", row.ring, "", "", "", match, detail::is_path(g) && g.order() == 3 ? "p3_ddim" : "");
      row.status = v.status;
      row.erratum = v.erratum;
      row.note = rep.dim->value == rep.ddim->value ? "dim = Dim_d" : "dim != Dim_d";
    } catch (const Error& e) {
      row.status = VerdictStatus::kInvalidInstance;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::vector<std::vector<std::string>> table2_cells(const std::vector<Table2Row>& rows) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"row", "ring", "claimed", "dim", "ddim", "status", "note"});
  for (const auto& r : rows)
    out.push_back({std::to_string(r.row), r.ring, r.claimed, r.dim, r.ddim, status_cell(r.status, r.erratum), r.note});
  return out;
}

}  // namespace

std::string render_table2_csv(const std::vector<Table2Row>& rows) {
  std::string out;
  for (const auto& cells : table2_cells(rows)) out += csv_line(cells);
  return out;
}

std::string render_table2_text(const std::vector<Table2Row>& rows) { return aligned(table2_cells(rows)); }

}  // namespace zdrlab

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "zdrlab/graph.hpp"

namespace zdrlab {

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::kDot;
  if (name == "edgelist") return ExportFormat::kEdgeList;
  if (name == "json") return ExportFormat::kJson;
  return std::nullopt;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

nlohmann::json optional_size(const std::optional<std::size_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string export_graph(const Graph& g, ExportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ExportFormat::kDot:
      out << "graph G {\n";
      for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
      for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
      out << "}\n";
      break;
    case ExportFormat::kEdgeList:
      out << "# zdrlab edge list\n# order " << g.order() << "\n";
      for (Vertex v = 0; v < g.order(); ++v) out << "# vertex " << v << " " << g.label(v) << "\n";
      for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
      break;
    case ExportFormat::kJson: {
      GraphInvariants inv = graph_invariants(g);
      nlohmann::ordered_json doc;
      doc["order"] = g.order();
      doc["labels"] = g.labels();
      auto edges = nlohmann::json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u, v});
      doc["edges"] = edges;
      doc["invariants"] = {
          {"size", inv.size},
          {"connected", inv.connected},
          {"diameter", optional_size(inv.diameter)},
          {"girth", optional_size(inv.girth)},
          {"clique_number", inv.clique_number},
          {"max_degree", inv.max_degree},
          {"min_degree", inv.min_degree},
          {"bipartite", inv.bipartite},
          {"regular", inv.regular},
          {"cut_vertices", inv.cut_vertices},
          {"degree_one_vertices", inv.degree_one_vertices},
      };
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

namespace {

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": bad integer '" +
                                std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
  std::optional<std::size_t> declared_order;
  std::vector<std::pair<std::size_t, std::string>> labels;
  std::vector<Edge> edges;
  std::size_t max_index_plus_one = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      auto tokens = split_ws(line.substr(hash + 1));
      if (tokens.size() == 2 && tokens[0] == "order") {
        declared_order = parse_index(tokens[1], line_no);
      } else if (tokens.size() >= 3 && tokens[0] == "vertex") {
        labels.emplace_back(parse_index(tokens[1], line_no), std::string(tokens[2]));
      }
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    std::size_t u = parse_index(tokens[0], line_no), v = parse_index(tokens[1], line_no);
    if (u >= Graph::kInfinity || v >= Graph::kInfinity)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": vertex index too large");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_index_plus_one = std::max({max_index_plus_one, u + 1, v + 1});
  }

  std::size_t order = declared_order.value_or(max_index_plus_one);
  if (order < max_index_plus_one)
    throw std::invalid_argument("edge list: edge endpoint exceeds declared order");
  std::vector<std::string> names(order);
  for (std::size_t v = 0; v < order; ++v) names[v] = std::to_string(v);
  for (auto& [v, name] : labels) {
    if (v >= order) throw std::invalid_argument("edge list: label for vertex beyond order");
    names[v] = std::move(name);
  }
  return Graph(order, edges, std::move(names));
}

}  // namespace zdrlab

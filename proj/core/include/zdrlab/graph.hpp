#pragma once

// Simple undirected graphs with precomputed all-pairs distances, the
// zero-divisor graph construction, classical invariants and text exports.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdrlab/bitset.hpp"
#include "zdrlab/ring.hpp"

namespace zdrlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph. Distances are computed on construction;
/// unreachable pairs hold Graph::kInfinity.
class Graph {
 public:
  static constexpr std::uint16_t kInfinity = 0xFFFF;

  Graph() = default;
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged. Missing labels default to the vertex index.
  Graph(std::size_t order, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).test(v); }
  const DynamicBitset& neighbors(Vertex v) const { return adjacency_.at(v); }
  const std::vector<Vertex>& neighbor_list(Vertex v) const { return neighbor_lists_.at(v); }
  std::size_t degree(Vertex v) const { return neighbor_lists_.at(v).size(); }

  std::uint16_t distance(Vertex u, Vertex v) const { return distances_[u * order() + v]; }
  const std::uint16_t* distance_row(Vertex u) const { return distances_.data() + u * order(); }

  bool connected() const noexcept { return connected_; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

 private:
  std::vector<DynamicBitset> adjacency_;
  std::vector<std::vector<Vertex>> neighbor_lists_;
  std::vector<std::uint16_t> distances_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
  bool connected_ = true;
};

/// Zero-divisor graph: vertices are the nonzero zero divisors (ascending
/// element index), labelled with the ring's element labels; x ~ y iff x != y
/// and x y = 0. Throws EmptyGraphError for integral domains.
Graph build_zdgraph(const FiniteRing& ring);

struct GraphInvariants {
  std::size_t order = 0;
  std::size_t size = 0;
  std::optional<std::size_t> diameter;  // nullopt: infinite (disconnected)
  std::optional<std::size_t> girth;     // nullopt: acyclic
  std::size_t clique_number = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  bool connected = true;
  bool bipartite = true;
  bool regular = true;
  std::vector<Vertex> cut_vertices;
  std::vector<Vertex> degree_one_vertices;
};

GraphInvariants graph_invariants(const Graph& g);

std::optional<std::size_t> diameter(const Graph& g);
std::optional<std::size_t> girth(const Graph& g);
std::size_t clique_number(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);
/// Proper 2-colouring (0/1 per vertex) if one exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);

enum class ExportFormat { kDot, kEdgeList, kJson };

std::optional<ExportFormat> parse_export_format(std::string_view name);

/// Deterministic text rendering. JSON carries order, labels, edges, invariants.
std::string export_graph(const Graph& g, ExportFormat format);

/// Reads the edge-list format written by export_graph: '#' starts a comment,
/// "# order N" fixes the vertex count, "# vertex I LABEL" sets a label, and
/// every other non-empty line is "u v" with 0-based indices.
/// Throws std::invalid_argument on malformed input.
Graph parse_edgelist(std::string_view text);

}  // namespace zdrlab

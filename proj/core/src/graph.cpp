#include "zdrlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "zdrlab/errors.hpp"

namespace zdrlab {

Graph::Graph(std::size_t order, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : adjacency_(order, DynamicBitset(order)), neighbor_lists_(order), labels_(std::move(labels)) {
  if (order >= kInfinity) throw std::invalid_argument("Graph: too many vertices");
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(u));
    if (!adjacency_[u].test(v)) {
      adjacency_[u].set(v);
      adjacency_[v].set(u);
      ++edge_count_;
    }
  }
  for (std::size_t v = 0; v < order; ++v)
    adjacency_[v].for_each([&](std::size_t u) { neighbor_lists_[v].push_back(static_cast<Vertex>(u)); });

  if (labels_.size() < order) {
    for (std::size_t v = labels_.size(); v < order; ++v) labels_.push_back(std::to_string(v));
  } else if (labels_.size() > order) {
    throw std::invalid_argument("Graph: more labels than vertices");
  }

  distances_.assign(order * order, kInfinity);
  std::vector<Vertex> queue(order);
  for (std::size_t s = 0; s < order; ++s) {
    std::uint16_t* row = distances_.data() + s * order;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<Vertex>(s);
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : neighbor_lists_[u])
        if (row[w] == kInfinity) {
          row[w] = static_cast<std::uint16_t>(row[u] + 1);
          queue[tail++] = w;
        }
    }
    if (s == 0 && tail != order) connected_ = false;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbor_lists_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_zdgraph(const FiniteRing& ring) {
  ZeroDivisorSet z = zero_divisors(ring);
  if (z.empty())
    throw EmptyGraphError("ring " + to_string(ring.spec()) +
                          " is an integral domain; its zero-divisor graph is empty");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    labels.push_back(ring.label(z.members[i]));
    auto row = ring.mul_row(z.members[i]);
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (row[z.members[j]] == 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(z.size(), edges, std::move(labels));
}

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

std::optional<std::size_t> diameter(const Graph& g) {
  if (!g.connected()) return std::nullopt;
  std::size_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const std::uint16_t* row = g.distance_row(u);
    for (Vertex v = 0; v < g.order(); ++v) best = std::max<std::size_t>(best, row[v]);
  }
  return best;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n), parent(n);
  std::vector<Vertex> queue(n);
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < n && best > 3; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    parent[s] = kUnseen;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbor_list(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  std::size_t run() {
    if (g_.order() == 0) return 0;
    DynamicBitset all(g_.order());
    for (std::size_t v = 0; v < g_.order(); ++v) all.set(v);
    best_ = 1;
    expand(all, 0);
    return best_;
  }

 private:
  // Branch and bound with greedy colouring: a candidate set that can be
  // coloured with c colours holds no clique larger than c.
  void expand(DynamicBitset candidates, std::size_t depth) {
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    DynamicBitset uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      DynamicBitset q = uncoloured;
      while (q.any()) {
        auto v = static_cast<Vertex>(q.find_first());
        q.reset(v);
        q.subtract(g_.neighbors(v));
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colour[i] <= best_) return;
      Vertex v = order[i];
      DynamicBitset next = candidates;
      next &= g_.neighbors(v);
      if (next.none())
        best_ = std::max(best_, depth + 1);
      else
        expand(std::move(next), depth + 1);
      candidates.reset(v);
    }
  }

  const Graph& g_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t clique_number(const Graph& g) { return CliqueSearch(g).run(); }

std::vector<Vertex> cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0), child_count(n, 0);
  std::vector<bool> is_cut(n, false);
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbor_list(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] == kUnvisited) {
          disc[w] = low[w] = timer++;
          ++child_count[f.v];
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent || f.v == root) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v, parent = f.parent;
      stack.pop_back();
      if (!stack.empty()) {
        low[parent] = std::min(low[parent], low[v]);
        if (parent != root && low[v] >= disc[parent]) is_cut[parent] = true;
      }
    }
    if (child_count[root] >= 2) is_cut[root] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbor_list(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

GraphInvariants graph_invariants(const Graph& g) {
  GraphInvariants inv;
  inv.order = g.order();
  inv.size = g.size();
  inv.connected = g.connected();
  inv.diameter = diameter(g);
  inv.girth = girth(g);
  inv.clique_number = clique_number(g);
  inv.bipartite = two_coloring(g).has_value();
  inv.cut_vertices = cut_vertices(g);
  if (g.order() > 0) {
    inv.min_degree = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.order(); ++v) {
      inv.max_degree = std::max(inv.max_degree, g.degree(v));
      inv.min_degree = std::min(inv.min_degree, g.degree(v));
      if (g.degree(v) == 1) inv.degree_one_vertices.push_back(v);
    }
    inv.regular = inv.max_degree == inv.min_degree;
  }
  return inv;
}

}  // namespace zdrlab

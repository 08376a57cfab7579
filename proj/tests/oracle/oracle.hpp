#pragma once

// Brute-force reference implementations used as test oracles. Everything
// here is written from the definitions with no shared code from the library:
// plain modular arithmetic for rings, BFS for distances and exhaustive subset
// enumeration for gamma, dim and Dim_d.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<char>> adj;

  explicit SimpleGraph(int order = 0) : n(order), adj(order, std::vector<char>(order, 0)) {}

  void connect(int u, int v) {
    adj[u][v] = adj[v][u] = 1;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[u][v]) out.emplace_back(u, v);
    return out;
  }
};

/// All-pairs BFS distances; -1 marks unreachable pairs.
inline std::vector<std::vector<int>> distances(const SimpleGraph& g) {
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, -1));
  for (int s = 0; s < g.n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < g.n; ++v)
        if (g.adj[u][v] && d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

inline bool connected(const SimpleGraph& g) {
  if (g.n == 0) return true;
  auto d = distances(g);
  return std::all_of(d[0].begin(), d[0].end(), [](int x) { return x >= 0; });
}

inline std::vector<int> members(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) out.push_back(v);
  return out;
}

inline bool dominating(const SimpleGraph& g, const std::vector<int>& s) {
  for (int x = 0; x < g.n; ++x) {
    bool ok = std::find(s.begin(), s.end(), x) != s.end();
    for (int u : s) ok = ok || g.adj[x][u];
    if (!ok) return false;
  }
  return true;
}

inline bool resolving(const std::vector<std::vector<int>>& d, const std::vector<int>& s) {
  const int n = static_cast<int>(d.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool split = false;
      for (int w : s) split = split || d[u][w] != d[v][w];
      if (!split) return false;
    }
  return true;
}

/// Smallest set satisfying `pred`, lexicographically least among those.
inline std::vector<int> least_set(int n, const std::function<bool(const std::vector<int>&)>& pred) {
  for (int k = 0; k <= n; ++k) {
    std::optional<std::vector<int>> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      auto s = members(mask, n);
      if (pred(s) && (!best || s < *best)) best = s;
    }
    if (best) return *best;
  }
  return {};
}

inline std::vector<int> gamma_set(const SimpleGraph& g) {
  return least_set(g.n, [&](const std::vector<int>& s) { return dominating(g, s); });
}

inline std::vector<int> dim_set(const SimpleGraph& g) {
  auto d = distances(g);
  return least_set(g.n, [&](const std::vector<int>& s) { return resolving(d, s); });
}

/// Dominant resolving set; the one-vertex graph uses the empty-set convention.
inline std::vector<int> ddim_set(const SimpleGraph& g) {
  if (g.n == 1) return {};
  auto d = distances(g);
  return least_set(g.n, [&](const std::vector<int>& s) { return dominating(g, s) && resolving(d, s); });
}

/// Connected random graph: a random spanning tree plus extra edges with
/// probability `p`, vertex numbering shuffled.
inline SimpleGraph random_connected(int n, double p, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.connect(perm[v], perm[pick(rng)]);
  }
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adj[u][v] && extra(rng)) g.connect(u, v);
  return g;
}

// --- rings ---------------------------------------------------------------------

/// Zero-divisor graph of Z_n as a set of (x, y) pairs, x < y, plus the sorted
/// vertex list.
struct ZdGraph {
  std::vector<int> vertices;
  std::set<std::pair<int, int>> edges;
};

inline ZdGraph zn_zero_divisor_graph(int n) {
  ZdGraph out;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (x * y % n == 0) {
        out.vertices.push_back(x);
        break;
      }
  for (int x : out.vertices)
    for (int y : out.vertices)
      if (x < y && x * y % n == 0) out.edges.emplace(x, y);
  return out;
}

/// a + b i in Z_n[i].
struct Gaussian {
  int a = 0, b = 0;
  auto operator<=>(const Gaussian&) const = default;
};

inline Gaussian gmul(Gaussian x, Gaussian y, int n) {
  return {((x.a * y.a - x.b * y.b) % n + n) % n, (x.a * y.b + x.b * y.a) % n};
}

/// "0", "3", "i", "2i", "1+i", "3+4i".
inline std::string glabel(Gaussian x) {
  if (x.b == 0) return std::to_string(x.a);
  std::string im = (x.b == 1 ? "" : std::to_string(x.b)) + "i";
  return x.a == 0 ? im : std::to_string(x.a) + "+" + im;
}

inline std::vector<Gaussian> gaussian_elements(int n) {
  std::vector<Gaussian> out;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) out.push_back({a, b});
  return out;
}

/// Edges as label pairs with the smaller string first.
inline std::set<std::pair<std::string, std::string>> gaussian_edge_labels(int n) {
  auto all = gaussian_elements(n);
  std::set<std::pair<std::string, std::string>> out;
  for (auto x : all)
    for (auto y : all) {
      if (x == Gaussian{} || y == Gaussian{} || !(x < y)) continue;
      if (gmul(x, y, n) != Gaussian{}) continue;
      std::string lx = glabel(x), ly = glabel(y);
      out.emplace(std::min(lx, ly), std::max(lx, ly));
    }
  return out;
}

}  // namespace oracle

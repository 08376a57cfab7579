#include "zdrlab/families.hpp"

#include <algorithm>

#include "zdrlab/errors.hpp"

namespace zdrlab {

std::string to_string(const FamilyId& id) {
  switch (id.kind) {
    case FamilyKind::kPath:
      return "P_" + std::to_string(id.n);
    case FamilyKind::kCycle:
      return "C_" + std::to_string(id.n);
    case FamilyKind::kComplete:
      return "K_" + std::to_string(id.n);
    case FamilyKind::kStar:
      return "S_" + std::to_string(id.n);
    case FamilyKind::kCompleteBipartite:
      return "K_{" + std::to_string(id.m) + "," + std::to_string(id.n) + "}";
  }
  return "?";
}

void validate(const FamilyId& id) {
  switch (id.kind) {
    case FamilyKind::kCycle:
      if (id.n < 3) throw InvalidParamsError("cycle needs n >= 3");
      break;
    case FamilyKind::kCompleteBipartite:
      if (id.m < 1 || id.n < 1) throw InvalidParamsError("complete bipartite needs m, n >= 1");
      break;
    default:
      if (id.n < 1) throw InvalidParamsError(to_string(id) + ": needs n >= 1");
  }
  if (id.order() >= Graph::kInfinity) throw InvalidParamsError(to_string(id) + ": too many vertices");
}

Graph generate_family(const FamilyId& id) {
  validate(id);
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(id.n);
  switch (id.kind) {
    case FamilyKind::kPath:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case FamilyKind::kCycle:
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
      break;
    case FamilyKind::kComplete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::kStar:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case FamilyKind::kCompleteBipartite: {
      const auto m = static_cast<Vertex>(id.m);
      for (Vertex u = 0; u < m; ++u)
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, m + v);
      break;
    }
  }
  return Graph(id.order(), edges);
}

FamilyId normalize(const FamilyId& id) {
  validate(id);
  switch (id.kind) {
    case FamilyKind::kPath:
      return id.n <= 2 ? FamilyId::complete(id.n) : id;
    case FamilyKind::kCycle:
      if (id.n == 3) return FamilyId::complete(3);
      if (id.n == 4) return FamilyId::complete_bipartite(2, 2);
      return id;
    case FamilyKind::kComplete:
      return id;
    case FamilyKind::kStar:
      if (id.n <= 2) return FamilyId::complete(id.n);
      if (id.n == 3) return FamilyId::path(3);
      return id;
    case FamilyKind::kCompleteBipartite: {
      const std::size_t a = std::min(id.m, id.n), b = std::max(id.m, id.n);
      if (a == 1) return normalize(FamilyId::star(b + 1));
      return FamilyId::complete_bipartite(a, b);
    }
  }
  return id;
}

std::optional<FamilyId> recognize_family(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || !g.connected()) return std::nullopt;
  if (g.size() == n * (n - 1) / 2) return FamilyId::complete(n);

  std::size_t max_deg = 0, min_deg = n, deg_one = 0;
  for (Vertex v = 0; v < n; ++v) {
    max_deg = std::max(max_deg, g.degree(v));
    min_deg = std::min(min_deg, g.degree(v));
    if (g.degree(v) == 1) ++deg_one;
  }

  if (auto colour = two_coloring(g)) {
    const auto side0 = static_cast<std::size_t>(std::count(colour->begin(), colour->end(), 0));
    const std::size_t a = std::min(side0, n - side0), b = std::max(side0, n - side0);
    if (a >= 2 && g.size() == a * b) return FamilyId::complete_bipartite(a, b);
  }
  if (n >= 4 && max_deg == n - 1 && deg_one == n - 1 && g.size() == n - 1) return FamilyId::star(n);
  if (n >= 3 && min_deg == 2 && max_deg == 2) return FamilyId::cycle(n);
  if (g.size() == n - 1 && max_deg <= 2) return FamilyId::path(n);
  return std::nullopt;
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

ClosedFormDims closed_form_dims(const FamilyId& id) {
  validate(id);
  ClosedFormDims out;
  const std::size_t n = id.n;
  switch (id.kind) {
    case FamilyKind::kPath:
      out.gamma = ceil_div(n, 3);
      out.gamma_note = "gamma(P_n) = ceil(n/3)";
      if (n >= 2) {
        out.dim = 1;
        out.dim_note = "dim(P_n) = 1";
      } else {
        out.dim_note = "dim(P_1) has no closed form here";
      }
      if (n == 1) {
        out.ddim = 0;
        out.ddim_note = "single-vertex convention";
      } else if (n >= 4) {
        out.ddim = ceil_div(n, 3);
        out.ddim_note = "Dim_d(P_n) = gamma(P_n) for n >= 4";
      } else {
        out.ddim_note = "no closed form for P_2, P_3";
      }
      break;
    case FamilyKind::kCycle:
      out.gamma = ceil_div(n, 3);
      out.gamma_note = "gamma(C_n) = ceil(n/3)";
      out.dim = 2;
      out.dim_note = "dim(C_n) = 2";
      if (n >= 7) {
        out.ddim = ceil_div(n, 3);
        out.ddim_note = "Dim_d(C_n) = gamma(C_n) for n >= 7";
      } else {
        out.ddim_note = "no closed form for C_n, n <= 6";
      }
      break;
    case FamilyKind::kComplete:
      out.gamma = 1;
      out.gamma_note = "gamma(K_n) = 1";
      out.dim = n - 1;
      out.dim_note = "dim(K_n) = n - 1";
      out.ddim = n - 1;
      out.ddim_note = n == 1 ? "single-vertex convention" : "Dim_d(K_n) = dim(K_n)";
      break;
    case FamilyKind::kStar:
      if (n >= 2) {
        out.gamma = 1;
        out.gamma_note = "gamma(S_n) = 1";
        out.ddim = n - 1;
        out.ddim_note = "Dim_d(S_n) = n - 1 for n >= 2";
      } else {
        out.ddim = 0;
        out.ddim_note = "single-vertex convention";
      }
      if (n >= 3) {
        out.dim = n - 2;
        out.dim_note = "dim(S_n) = n - 2 for n >= 3";
      } else {
        out.dim_note = "dim(S_n) closed form not used for n <= 2";
      }
      break;
    case FamilyKind::kCompleteBipartite:
      if (id.m >= 2 && id.n >= 2) {
        out.gamma = 2;
        out.gamma_note = "gamma(K_{m,n}) = 2";
        out.dim = id.m + id.n - 2;
        out.dim_note = "dim(K_{m,n}) = m + n - 2";
        out.ddim = id.m + id.n - 2;
        out.ddim_note = "Dim_d(K_{m,n}) = dim(K_{m,n})";
      } else {
        out.gamma_note = out.dim_note = out.ddim_note = "closed forms need m, n >= 2";
      }
      break;
  }
  return out;
}

std::optional<std::vector<Vertex>> path_cycle_dominating_witness(const FamilyId& id) {
  validate(id);
  const std::size_t n = id.n;
  std::vector<Vertex> w;
  if (id.kind == FamilyKind::kPath) {
    // 1, 4, 7, ... with the last pick clamped to the final vertex.
    for (std::size_t i = 1; i - 1 < n; i += 3) w.push_back(static_cast<Vertex>(std::min(i, n - 1)));
  } else if (id.kind == FamilyKind::kCycle) {
    for (std::size_t i = 0; i < n; i += 3) w.push_back(static_cast<Vertex>(i));
  } else {
    return std::nullopt;
  }
  return w;
}

}  // namespace zdrlab

#include <algorithm>

#include "zdrlab/verify.hpp"

namespace zdrlab {

const std::vector<ErrataEntry>& errata_ledger() {
  static const std::vector<ErrataEntry> ledger = {
      {"E1",
       "Dim_d = 1 whenever the zero-divisor graph is the path P_3",
       "Dim_d(P_3) = 2",
       "An endpoint of P_3 resolves the graph but does not dominate the far endpoint; the centre "
       "dominates but cannot tell the two endpoints apart. No single vertex does both.",
       {{"P2.1", "p3_ddim"}, {"T2.6", "p3_ddim"}, {"TAB1", "p3_ddim"}, {"TAB2", "p3_ddim"}, {"T2.4", "p3_ddim"}}},
      {"E2",
       "Dim_d(P_n) = 1 exactly for n = 1, 2",
       "Dim_d(P_1) = 0 under the single-vertex convention",
       "The one-vertex graph is assigned Dim_d = 0 (the empty set resolves it). With that convention "
       "only n = 2 gives 1; the same applies to local rings whose graph is a single vertex.",
       {{"T6", "single_vertex_convention"}, {"T2.4", "single_vertex_convention"}}},
      {"E3",
       "Gamma(R) is K_{|I1|,|I2|} for R = K1 x K2 with I1 = K1 x 0, I2 = 0 x K2",
       "Gamma(R) is K_{|I1|-1,|I2|-1}",
       "The zero element of each ideal is not a vertex, so each side loses one element. The Dim_d "
       "value |I1| + |I2| - 2 omega is still correct.",
       {{"T2122", "bipartite_sides_minus_one"}}},
      {"E4",
       "Dim_d(Gamma(Z_n[i])) = p1^2 - p2^2 - 2 omega for n = p1 p2, both primes = 3 mod 4",
       "Dim_d = p1^2 + p2^2 - 4",
       "The graph is K_{p1^2-1, p2^2-1}; with omega = 2 the complete bipartite value m + n - 2 gives "
       "p1^2 + p2^2 - 4. The claimed expression is negative for p1 < p2.",
       {{"T2123", "case2_formula"}}},
      {"E5",
       "girth 2 for Gamma(Z_p[i]), p = 1 mod 4 (a complete bipartite graph)",
       "girth 4",
       "A simple complete bipartite graph with both sides of size >= 2 has girth 4. Using 4 in "
       "2p - girth gives 2p - 4, which matches the computed Dim_d.",
       {{"T2123", "case3_girth"}}},
      {"E6",
       "Dim_d(Gamma(Z_pq)) = p + q - 4 for distinct primes p, q",
       "Dim_d(Gamma(Z_2q)) = q - 1",
       "For p = 2 the graph is the star K_{1,q-1}, not a bipartite graph with both sides >= 2, so "
       "the formula does not apply. The pq row is treated as covering odd p, q only.",
       {{"T2.6", "pq_with_2"}, {"TAB1", "pq_with_2"}}},
  };
  return ledger;
}

std::string lookup_erratum(std::string_view theorem_id, std::string_view pattern) {
  if (pattern.empty()) return {};
  for (const auto& entry : errata_ledger()) {
    auto hit = std::find_if(entry.matches.begin(), entry.matches.end(),
                            [&](const auto& m) { return m.first == theorem_id && m.second == pattern; });
    if (hit != entry.matches.end()) return entry.id;
  }
  return {};
}

}  // namespace zdrlab

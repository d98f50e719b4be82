#include "pire/testkit/oracles.hpp"

#include <algorithm>
#include <vector>

namespace pire::testkit {

int naive_chromatic_number(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) edges.emplace_back(e.end0, e.end1);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) continue;  // n > 0 here, so 0 colours never suffice
    std::vector<std::size_t> colour(n, 0);
    while (true) {
      const bool proper = std::all_of(edges.begin(), edges.end(),
                                      [&](const auto& e) { return colour[e.first] != colour[e.second]; });
      if (proper) return static_cast<int>(k);
      std::size_t i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
  return static_cast<int>(n);
}

std::size_t min_simple_degree(const Multigraph& g) {
  if (g.vertex_count() == 0) return 0;
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.end0].push_back(e.end1);
    adj[e.end1].push_back(e.end0);
  }
  std::size_t best = SIZE_MAX;
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    best = std::min<std::size_t>(best, std::unique(a.begin(), a.end()) - a.begin());
  }
  return best;
}

}  // namespace pire::testkit

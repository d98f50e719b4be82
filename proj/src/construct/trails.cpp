#include "pire/construct/trails.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "pire/core/error.hpp"

namespace pire {

std::vector<std::vector<DirectedEdge>> quotient_euler_circuits(const PairedGraph& pg) {
  const auto& g = pg.graph;
  const std::size_t n = pg.pairing.size();
  // incident edge-ends per quotient vertex, ascending
  std::vector<std::vector<EdgeEnd>> ends(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    ends[pg.pairing.pair_of(g.edge(e).end0)].push_back({e, 0});
    ends[pg.pairing.pair_of(g.edge(e).end1)].push_back({e, 1});
  }
  std::vector<std::uint8_t> used(g.edge_count(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::vector<DirectedEdge>> circuits;

  for (PairId start = 0; start < n; ++start) {
    while (cursor[start] < ends[start].size() && used[ends[start][cursor[start]].edge]) ++cursor[start];
    if (cursor[start] == ends[start].size()) continue;

    std::vector<std::pair<PairId, std::optional<DirectedEdge>>> stack = {{start, std::nullopt}};
    std::vector<DirectedEdge> circuit;
    while (!stack.empty()) {
      const PairId p = stack.back().first;
      auto& cur = cursor[p];
      while (cur < ends[p].size() && used[ends[p][cur].edge]) ++cur;
      if (cur < ends[p].size()) {
        const EdgeEnd out = ends[p][cur];
        used[out.edge] = 1;
        const PairId q = pg.pairing.pair_of(g.vertex_of(out.partner()));
        stack.push_back({q, DirectedEdge{out.edge, out.side}});
      } else {
        if (stack.back().second) circuit.push_back(*stack.back().second);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    circuits.push_back(std::move(circuit));
  }
  return circuits;
}

std::vector<PiTrail> pi_trail_decomposition(const PairedGraph& pg) {
  if (!is_degree_faithful(pg)) throw DomainError("pi_trail_decomposition: pairing is not degree-faithful");
  const auto& g = pg.graph;
  const std::size_t m = g.edge_count();

  std::vector<Side> tail_side(m, 0);
  for (const auto& circuit : quotient_euler_circuits(pg)) {
    for (const auto& d : circuit) tail_side[d.edge] = d.tail;
  }
  std::vector<std::vector<EdgeEnd>> heads(g.vertex_count()), tails(g.vertex_count());
  for (EdgeId e = 0; e < m; ++e) {
    const DirectedEdge d{e, tail_side[e]};
    heads[g.vertex_of(d.head_end())].push_back(d.head_end());
    tails[g.vertex_of(d.tail_end())].push_back(d.tail_end());
  }
  // successor[e] = edge following e in its trail
  std::vector<EdgeId> successor(m);
  for (VertexId y = 0; y < g.vertex_count(); ++y) {
    const auto& in = heads[y];
    const auto& out = tails[pg.pairing.partner(y)];
    if (in.size() != out.size()) {
      throw std::logic_error("pi_trail_decomposition: Euler orientation is unbalanced");
    }
    for (std::size_t i = 0; i < in.size(); ++i) successor[in[i].edge] = out[i].edge;
  }
  std::vector<PiTrail> trails;
  std::vector<std::uint8_t> seen(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (seen[e]) continue;
    PiTrail trail;
    for (EdgeId cur = e; !seen[cur]; cur = successor[cur]) {
      seen[cur] = 1;
      trail.edges.push_back({cur, tail_side[cur]});
    }
    trails.push_back(std::move(trail));
  }
  return trails;
}

}  // namespace pire

#include "pire/construct/generators.hpp"

#include "pire/construct/random.hpp"
#include "pire/construct/triangulation.hpp"

namespace pire {

PairedGraph random_planar_paired_graph(std::uint64_t seed, std::size_t n_pairs) {
  Rng rng(seed);
  const std::size_t n = 2 * n_pairs;
  PairedGraph pg;
  RotationSystem rot;
  if (n >= 3) {
    Triangulation::random(n, rng).to_embedded_graph(pg.graph, rot);
  } else {
    rot.order.resize(n);
    for (std::size_t v = 0; v < n; ++v) pg.graph.add_vertex("v" + std::to_string(v));
    if (n == 2 && rng.chance(0.5)) {
      pg.graph.add_edge("e0", 0, 1);
      rot.order[0].push_back({0, 0});
      rot.order[1].push_back({0, 1});
    }
  }

  const double p_drop = 0.4 * rng.unit();
  std::vector<bool> drop(pg.graph.edge_count());
  for (std::size_t e = 0; e < drop.size(); ++e) drop[e] = rng.chance(p_drop);
  remove_edges(pg.graph, rot, drop);

  const double p_double = 0.15 * rng.unit();
  const auto kept = static_cast<EdgeId>(pg.graph.edge_count());
  for (EdgeId e = 0; e < kept; ++e) {
    if (rng.chance(p_double)) add_parallel_edge(pg.graph, rot, e, pg.graph.edge(e).name + "+");
  }
  const std::size_t loops = rng.chance(0.3) ? 1 + rng.index(3) : 0;
  for (std::size_t i = 0; i < loops; ++i) {
    add_loop(pg.graph, rot, static_cast<VertexId>(rng.index(n)), "l" + std::to_string(i));
  }

  std::vector<VertexId> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<VertexId>(v);
  rng.shuffle(order.begin(), order.end());
  std::vector<std::array<VertexId, 2>> pairs;
  for (std::size_t i = 0; i + 1 < n; i += 2) pairs.push_back({order[i], order[i + 1]});
  pg.pairing = Pairing(n, pairs);
  pg.rotation = std::move(rot);
  return pg;
}

}  // namespace pire

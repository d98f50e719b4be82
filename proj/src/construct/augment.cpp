#include "pire/construct/augment.hpp"

#include "pire/core/error.hpp"

namespace pire {

PairedGraph make_degree_faithful(const PairedGraph& pg) {
  if (!pg.rotation) throw DomainError("make_degree_faithful: rotation system required");
  validate_rotation(pg.graph, *pg.rotation);

  PairedGraph out;
  RotationSystem rot = *pg.rotation;
  out.graph = pg.graph;
  const auto original_edges = static_cast<EdgeId>(pg.graph.edge_count());
  for (EdgeId e = 0; e < original_edges; ++e) {
    add_parallel_edge(out.graph, rot, e, pg.graph.edge(e).name + "'");
  }
  for (const auto& [u, v] : pg.pairing.pairs()) {
    const auto du = out.graph.degree(u);
    const auto dv = out.graph.degree(v);
    const VertexId low = du < dv ? u : v;
    const auto gap = (du < dv ? dv - du : du - dv) / 2;
    for (std::size_t i = 0; i < gap; ++i) {
      add_loop(out.graph, rot, low, out.graph.vertex_name(low) + "@" + std::to_string(i));
    }
  }
  out.pairing = pg.pairing;
  out.rotation = std::move(rot);
  return out;
}

}  // namespace pire

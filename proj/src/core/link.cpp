#include "pire/core/link.hpp"

namespace pire {

PairedGraph link_graph(const TwoComplex& c) {
  validate_complex(c);
  const auto& skel = c.skeleton;
  PairedGraph link;
  std::vector<std::array<VertexId, 2>> pairs;
  for (const auto& t : third_edges(skel)) {
    link.graph.add_vertex(skel.edge(t.edge).name + ":" + std::to_string(t.side));
  }
  for (EdgeId e = 0; e < skel.edge_count(); ++e) pairs.push_back({2 * e, 2 * e + 1});
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const auto& steps = c.cells[i].steps;
    for (std::size_t j = 0; j < steps.size(); ++j) {
      const auto& next = steps[(j + 1) % steps.size()];
      link.graph.add_edge("L" + std::to_string(i) + "." + std::to_string(j),
                          link_vertex(steps[j].exit_third()), link_vertex(next.entry_third()));
    }
  }
  link.pairing = Pairing(link.graph.vertex_count(), pairs);
  return link;
}

}  // namespace pire

#include "pire/construct/inverse_link.hpp"

#include <algorithm>

#include "pire/construct/trails.hpp"
#include "pire/core/error.hpp"

namespace pire {

TwoComplex inverse_link(const PairedGraph& pg) {
  if (!is_degree_faithful(pg)) throw DomainError("inverse_link: pairing is not degree-faithful");
  require_planarity_certificate(pg, "inverse_link");

  TwoComplex c;
  c.kind = CellKind::punctured;
  const VertexId h = c.skeleton.add_vertex("h");
  for (const auto& [u, v] : pg.pairing.pairs()) {
    c.skeleton.add_edge("e[" + pg.graph.vertex_name(u) + "|" + pg.graph.vertex_name(v) + "]", h, h);
  }
  // Directed edge x->y becomes the step entering loop e_pair(y) through y's
  // side; it exits through partner(y), the tail of the next trail edge.
  for (const auto& trail : pi_trail_decomposition(pg)) {
    Walk w;
    for (const auto& d : trail.edges) {
      const VertexId y = pg.graph.vertex_of(d.head_end());
      w.steps.push_back({pg.pairing.pair_of(y), pg.pairing.member_side(y)});
    }
    c.cells.push_back(std::move(w));
  }
  return c;
}

std::vector<VertexId> inverse_link_identification(const PairedGraph& pg) {
  std::vector<VertexId> id;
  id.reserve(2 * pg.pairing.size());
  for (const auto& [u, v] : pg.pairing.pairs()) {
    id.push_back(u);
    id.push_back(v);
  }
  return id;
}

bool equal_under_identification(const PairedGraph& link, const PairedGraph& pg,
                                const std::vector<VertexId>& identification) {
  if (link.graph.vertex_count() != pg.graph.vertex_count() ||
      identification.size() != link.graph.vertex_count() ||
      link.pairing.size() != pg.pairing.size()) {
    return false;
  }
  using Key = std::pair<VertexId, VertexId>;
  std::vector<Key> a, b;
  for (const auto& e : link.graph.edges()) {
    a.push_back(std::minmax(identification[e.end0], identification[e.end1]));
  }
  for (const auto& e : pg.graph.edges()) b.push_back(std::minmax(e.end0, e.end1));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  for (PairId p = 0; p < link.pairing.size(); ++p) {
    const auto& lp = link.pairing.pair(p);
    const auto mapped = std::minmax(identification[lp[0]], identification[lp[1]]);
    const auto& target = pg.pairing.pair(pg.pairing.pair_of(mapped.first));
    if (target[0] != mapped.first || target[1] != mapped.second) return false;
  }
  return true;
}

}  // namespace pire

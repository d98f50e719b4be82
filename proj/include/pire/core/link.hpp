#pragma once

#include <vector>

#include "pire/core/complex.hpp"
#include "pire/core/paired_graph.hpp"

namespace pire {

/// Index of the link-graph vertex for third-edge t: 2·edge + side.
inline VertexId link_vertex(ThirdEdge t) { return 2 * t.edge + t.side; }

/// Link graph with its default pairing. Vertices are the third-edges of the
/// skeleton (named "<edge>:<side>"); every cyclically consecutive step pair of
/// every cell contributes one edge from the exit third-edge of the first step
/// to the entry third-edge of the second. Pair i is {(e_i,0), (e_i,1)}.
PairedGraph link_graph(const TwoComplex& c);

}  // namespace pire

#pragma once

#include <vector>

#include "pire/core/complex.hpp"
#include "pire/core/paired_graph.hpp"

namespace pire {

/// Punctured complex on a single vertex "h" with one loop per pair (named
/// "e[u|v]"); the smaller member of the pair sits at loop side 0. Each
/// pi-trail becomes one cell. Requires a degree-faithful pairing and a planar
/// rotation; throws DomainError otherwise.
TwoComplex inverse_link(const PairedGraph& pg);

/// The canonical identification used by inverse_link: link vertex 2p+s maps
/// to member s of pair p.
std::vector<VertexId> inverse_link_identification(const PairedGraph& pg);

/// True iff `link` equals `pg` after relabelling link vertices through
/// `identification`: same vertex count, identical edge multisets as unordered
/// endpoint pairs, and the same pairing.
bool equal_under_identification(const PairedGraph& link, const PairedGraph& pg,
                                const std::vector<VertexId>& identification);

}  // namespace pire

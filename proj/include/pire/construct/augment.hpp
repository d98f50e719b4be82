#pragma once

#include "pire/core/paired_graph.hpp"

namespace pire {

/// Doubles every edge (the copy sits next to the original in both rotations),
/// then pads the lower-degree member of each pair with loops until paired
/// degrees agree. Genus and the cross-pair adjacency relation are preserved.
/// Copies are named "<edge>'" and loops "<vertex>@<i>". Requires a rotation.
PairedGraph make_degree_faithful(const PairedGraph& pg);

}  // namespace pire

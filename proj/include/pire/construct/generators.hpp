#pragma once

#include <cstdint>

#include "pire/core/paired_graph.hpp"

namespace pire {

/// Random 2-pire map on 2·n_pairs vertices: a random planar triangulation
/// grown by face insertions, with some edges deleted or doubled and a few
/// loops added (rotation kept planar throughout), then a random perfect
/// matching as pairing. Deterministic given the seed.
PairedGraph random_planar_paired_graph(std::uint64_t seed, std::size_t n_pairs);

}  // namespace pire

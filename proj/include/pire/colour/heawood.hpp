#pragma once

#include <vector>

#include "pire/colour/colouring.hpp"

namespace pire {

struct EliminationOrder {
  std::vector<PairId> pairs;     // removal order
  std::vector<int> degrees;      // simple-quotient degree at removal time
};

/// Repeatedly removes a pair of minimum degree in the remaining simple
/// quotient (lowest pair id on ties). Requires a planar rotation system;
/// throws DomainError otherwise. A removal degree above 11 would contradict
/// Euler's formula and raises std::logic_error.
EliminationOrder heawood_degeneracy_order(const PairedGraph& pg);

/// Greedy colouring along the reversed elimination order, smallest free
/// colour in 0..11. Palette size is always 12.
PairColouring heawood_colour_12(const PairedGraph& pg);

}  // namespace pire

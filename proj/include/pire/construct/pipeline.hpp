#pragma once

#include "pire/colour/chromatic.hpp"
#include "pire/core/complex.hpp"
#include "pire/construct/witness.hpp"

namespace pire {

struct PipelineResult {
  PairedGraph augmented;     // degree-faithful witness, rotation carried along
  TwoComplex punctured;      // inverse_link(augmented)
  TwoComplex sealed;         // seal(punctured)
  ChromaticResult<EdgeCarrier> exact;  // exact edge-chromatic number of sealed
  ComplexColouring heawood;  // 12-colouring of sealed from the augmented map
  int clique_lower_bound = 0;
};

/// witness -> make_degree_faithful -> inverse_link -> seal, with every stage
/// checked: the punctured link graph equals the augmented map, sealing keeps
/// the link vertex set and only adds link edges, the Heawood colouring is
/// valid on the sealed complex, and the exact edge-chromatic number is 12.
/// Throws DomainError if a check fails.
PipelineResult build_non_11_colourable(const Witness2Pire& witness);

}  // namespace pire

#pragma once

#include <cstdint>
#include <vector>

#include "pire/colour/colouring.hpp"

namespace pire {

/// What the exact solver did, for the optional proof log.
struct SolverLog {
  std::vector<VertexId> clique;   // lower-bound witness
  int initial_upper_bound = 0;    // greedy DSATUR colour count
  std::uint64_t branches = 0;     // branch-and-bound nodes expanded
};

template <class Carrier>
struct ChromaticResult {
  int k = 0;
  Colouring<Carrier> witness;
  SolverLog log;
};

/// Exact vertex chromatic number of the simple graph underlying g (loops
/// dropped, parallels merged). Greedy clique lower bound, then DSATUR
/// branch-and-bound. Ties go to the lowest vertex id and the lowest colour, so
/// the witness is reproducible.
ChromaticResult<VertexCarrier> chromatic_number(const Multigraph& g);

/// chromatic_number of simple_quotient(pg), witness indexed by pair.
ChromaticResult<PairCarrier> pair_chromatic_number(const PairedGraph& pg);

/// Pair-chromatic number of the link graph; edge e takes the colour of the
/// pair {(e,0),(e,1)}.
ChromaticResult<EdgeCarrier> edge_chromatic_number_complex(const TwoComplex& c);

/// Smallest k <= k_max admitting a colouring accepted by
/// is_valid_complex_colouring, found by exhaustive search over edge colours
/// with the first edge pinned to colour 0. Never looks at the link graph.
/// Rejects skeletons with more than 12 edges unless `force` is set; throws
/// DomainError if no k <= k_max works.
int brute_force_edge_chromatic(const TwoComplex& c, int k_max, bool force = false);

}  // namespace pire

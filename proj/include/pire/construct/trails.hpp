#pragma once

#include <vector>

#include "pire/core/paired_graph.hpp"

namespace pire {

/// An edge of the paired graph traversed from end `tail` to the other end.
struct DirectedEdge {
  EdgeId edge = 0;
  Side tail = 0;

  EdgeEnd tail_end() const { return {edge, tail}; }
  EdgeEnd head_end() const { return {edge, static_cast<Side>(1 - tail)}; }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Cyclic sequence of directed edges; the tail of each is the partner of the
/// head of its predecessor.
struct PiTrail {
  std::vector<DirectedEdge> edges;
};

/// Euler circuit of every component of the paired quotient (Hierholzer,
/// lowest id first) as directed edges in traversal order.
std::vector<std::vector<DirectedEdge>> quotient_euler_circuits(const PairedGraph& pg);

/// Splits the edges of a degree-faithful paired graph into pi-trails:
/// orient edges along quotient Euler circuits, match head-ends at y with
/// tail-ends at partner(y) in sorted order, and follow the resulting
/// successor permutation. Throws DomainError if not degree-faithful.
std::vector<PiTrail> pi_trail_decomposition(const PairedGraph& pg);

}  // namespace pire

#pragma once

#include <span>
#include <vector>

#include "pire/core/multigraph.hpp"

namespace pire {

/// A directed traversal of an edge: it enters the edge at side `entry` (so it
/// starts at vertex end(entry)) and leaves at the opposite side.
struct Step {
  EdgeId edge = 0;
  Side entry = 0;

  Side exit() const { return static_cast<Side>(1 - entry); }
  ThirdEdge entry_third() const { return {edge, entry}; }
  ThirdEdge exit_third() const { return {edge, exit()}; }

  friend bool operator==(const Step&, const Step&) = default;
};

/// A walk as a step sequence. Closed walks are read cyclically.
struct Walk {
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const Walk&, const Walk&) = default;
};

VertexId walk_start(const Multigraph& g, const Walk& w);
VertexId walk_end(const Multigraph& g, const Walk& w);

/// Empty string if w is a nonempty closed walk in g (cyclic vertex
/// compatibility), otherwise a reason.
std::string closed_walk_problem(const Multigraph& g, const Walk& w);

/// Reverses step order and flips every step's entry side.
Walk walk_reverse(const Walk& w);

/// Splices walks; the end vertex of each walk must be the start vertex of the
/// next. Throws InputError on incompatible junctions.
Walk walk_concat(const Multigraph& g, std::span<const Walk> walks);

}  // namespace pire

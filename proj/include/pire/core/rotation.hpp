#pragma once

#include <string>
#include <vector>

#include "pire/core/multigraph.hpp"

namespace pire {

/// A cyclic order of the edge-ends at every vertex.
struct RotationSystem {
  std::vector<std::vector<EdgeEnd>> order;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// Empty string if `rot` is a valid rotation system for `g`, otherwise a
/// one-line reason.
std::string rotation_problem(const Multigraph& g, const RotationSystem& rot);

/// Throws InputError when rotation_problem is non-empty.
void validate_rotation(const Multigraph& g, const RotationSystem& rot);

struct ComponentGenus {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  int genus = 0;
};

struct GenusReport {
  std::vector<ComponentGenus> components;

  bool is_planar_embedding() const;
  std::size_t total_faces() const;
};

/// Traces face boundaries (a dart (e,s) leaves vertex end(s); the next dart is
/// the rotation successor of the arriving end) and computes the genus of each
/// connected component. Components follow connected_components order.
GenusReport genus_check(const Multigraph& g, const RotationSystem& rot);

/// Face boundaries as dart cycles. Every dart appears in exactly one face.
std::vector<std::vector<EdgeEnd>> trace_faces(const Multigraph& g, const RotationSystem& rot);

/// Adds an edge parallel to `e` with the same end orientation, placed in the
/// rotation right after (e,0) and right before (e,1). Genus is unchanged.
EdgeId add_parallel_edge(Multigraph& g, RotationSystem& rot, EdgeId e, std::string name);

/// Adds a loop at v whose two ends are consecutive in v's rotation (appended
/// at the end of the cyclic order). Genus is unchanged.
EdgeId add_loop(Multigraph& g, RotationSystem& rot, VertexId v, std::string name);

/// Removes every edge e with drop[e] from both graph and rotation; surviving
/// edges keep their relative order. Genus per component does not increase.
void remove_edges(Multigraph& g, RotationSystem& rot, const std::vector<bool>& drop);

}  // namespace pire

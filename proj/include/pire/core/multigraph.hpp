#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pire {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Side = std::uint8_t;

/// One of the two distinguishable ends of an edge. Side 0 and side 1 play the
/// role of the interval ends 0_e and 1_e; a loop still has two ends.
struct EdgeEnd {
  EdgeId edge = 0;
  Side side = 0;

  EdgeEnd partner() const { return {edge, static_cast<Side>(1 - side)}; }
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// A third-edge is named by the edge-end it contains.
using ThirdEdge = EdgeEnd;

struct Edge {
  std::string name;
  VertexId end0 = 0;
  VertexId end1 = 0;

  VertexId end(Side side) const { return side == 0 ? end0 : end1; }
  bool is_loop() const { return end0 == end1; }
};

/// Multigraph with named vertices and edges; loops and parallel edges are
/// allowed. Ids are dense indices in insertion order, and that order is the
/// canonical order used everywhere in the library.
class Multigraph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId end0, VertexId end1);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const std::string> vertex_names() const { return vertex_names_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  VertexId vertex_of(EdgeEnd end) const { return edges_.at(end.edge).end(end.side); }

  /// Loops count twice.
  std::size_t degree(VertexId v) const { return degree_.at(v); }

  /// Edge-ends at v, sorted by (edge, side).
  std::vector<EdgeEnd> ends_at(VertexId v) const;

  /// Edge-ends grouped by vertex, each group sorted by (edge, side).
  std::vector<std::vector<EdgeEnd>> incidence() const;

  bool has_loops() const;
  bool has_parallel_edges() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// Vertex sets of connected components; components ordered by their smallest
/// vertex, vertices ascending.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

/// True iff both graphs have the same vertex count and every edge of `small`
/// (as an unordered endpoint pair) is matched by a distinct edge of `big`.
bool edge_multiset_contains(const Multigraph& big, const Multigraph& small);

/// All 2·|E| edge-ends in (edge, side) order.
std::vector<ThirdEdge> third_edges(const Multigraph& g);

}  // namespace pire

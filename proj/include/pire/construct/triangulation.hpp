#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "pire/core/paired_graph.hpp"
#include "pire/construct/random.hpp"

namespace pire {

/// A simple triangulation of the sphere kept as consistently oriented faces.
/// Supports vertex insertion into a face and edge flips; converts to a
/// multigraph with the rotation system whose traced faces are exactly these.
class Triangulation {
 public:
  using Face = std::array<VertexId, 3>;

  /// Two faces on one triangle (3 vertices).
  Triangulation();

  /// Grows a random triangulation on n >= 3 vertices by repeated insertion
  /// into a uniformly chosen face.
  static Triangulation random(std::size_t n, Rng& rng);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t face_count() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }
  bool adjacent(VertexId u, VertexId v) const { return face_of_.contains({u, v}); }

  /// Inserts a new vertex inside face f; returns it.
  VertexId insert_vertex(std::size_t f);

  /// The edge (a,b) is the directed side of face f starting at corner k. Returns
  /// the endpoints {c,d} of the edge that would replace {a,b}, or nullopt when
  /// the flip would create a parallel edge.
  struct Flip {
    VertexId a, b, c, d;
    std::size_t f, g;
    Face old_f, old_g;
  };
  std::optional<Flip> flip_candidate(std::size_t f, int k) const;
  void apply(const Flip& flip);
  void undo(const Flip& flip);

  /// Undirected edges (u < v), sorted.
  std::vector<std::array<VertexId, 2>> edges() const;

  /// Vertices "v0".., edges "e0".. in edges() order, rotation from faces.
  void to_embedded_graph(Multigraph& g, RotationSystem& rot) const;

 private:
  void index_face(std::size_t f);

  std::size_t vertex_count_ = 3;
  std::vector<Face> faces_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> face_of_;  // directed side -> face
};

}  // namespace pire

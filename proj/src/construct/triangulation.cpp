#include "pire/construct/triangulation.hpp"

#include <algorithm>
#include <set>

namespace pire {

Triangulation::Triangulation() : faces_{{0, 1, 2}, {0, 2, 1}} {
  index_face(0);
  index_face(1);
}

Triangulation Triangulation::random(std::size_t n, Rng& rng) {
  Triangulation t;
  while (t.vertex_count() < n) t.insert_vertex(rng.index(t.face_count()));
  return t;
}

void Triangulation::index_face(std::size_t f) {
  const auto& face = faces_[f];
  for (int k = 0; k < 3; ++k) face_of_[{face[k], face[(k + 1) % 3]}] = f;
}

VertexId Triangulation::insert_vertex(std::size_t f) {
  const auto [a, b, c] = faces_.at(f);
  const auto v = static_cast<VertexId>(vertex_count_++);
  faces_[f] = {a, b, v};
  faces_.push_back({b, c, v});
  faces_.push_back({c, a, v});
  index_face(f);
  index_face(faces_.size() - 2);
  index_face(faces_.size() - 1);
  return v;
}

std::optional<Triangulation::Flip> Triangulation::flip_candidate(std::size_t f, int k) const {
  const auto& face = faces_.at(f);
  const VertexId a = face[k], b = face[(k + 1) % 3], c = face[(k + 2) % 3];
  const std::size_t g = face_of_.at({b, a});
  const auto& other = faces_[g];
  VertexId d = other[0];
  for (auto x : other) {
    if (x != a && x != b) d = x;
  }
  if (c == d || adjacent(c, d)) return std::nullopt;
  return Flip{a, b, c, d, f, g, face, other};
}

void Triangulation::apply(const Flip& flip) {
  face_of_.erase({flip.a, flip.b});
  face_of_.erase({flip.b, flip.a});
  faces_[flip.f] = {flip.c, flip.a, flip.d};
  faces_[flip.g] = {flip.d, flip.b, flip.c};
  index_face(flip.f);
  index_face(flip.g);
}

void Triangulation::undo(const Flip& flip) {
  face_of_.erase({flip.c, flip.d});
  face_of_.erase({flip.d, flip.c});
  faces_[flip.f] = flip.old_f;
  faces_[flip.g] = flip.old_g;
  index_face(flip.f);
  index_face(flip.g);
}

std::vector<std::array<VertexId, 2>> Triangulation::edges() const {
  std::set<std::array<VertexId, 2>> out;
  for (const auto& [side, f] : face_of_) {
    out.insert({std::min(side.first, side.second), std::max(side.first, side.second)});
  }
  return {out.begin(), out.end()};
}

void Triangulation::to_embedded_graph(Multigraph& g, RotationSystem& rot) const {
  g = Multigraph();
  for (std::size_t v = 0; v < vertex_count_; ++v) g.add_vertex("v" + std::to_string(v));
  const auto es = edges();
  std::map<std::pair<VertexId, VertexId>, EdgeEnd> end_towards;  // (at, towards) -> edge-end at `at`
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto e = g.add_edge("e" + std::to_string(i), es[i][0], es[i][1]);
    end_towards[{es[i][0], es[i][1]}] = {e, 0};
    end_towards[{es[i][1], es[i][0]}] = {e, 1};
  }
  // Face (x,y,z) traced as x->y->z: arriving at y from x continues to z, so the
  // successor of y's end towards x is y's end towards z.
  std::vector<std::map<VertexId, VertexId>> next(vertex_count_);
  for (const auto& face : faces_) {
    for (int k = 0; k < 3; ++k) next[face[(k + 1) % 3]][face[k]] = face[(k + 2) % 3];
  }
  rot.order.assign(vertex_count_, {});
  for (VertexId y = 0; y < vertex_count_; ++y) {
    if (next[y].empty()) continue;
    const VertexId first = next[y].begin()->first;
    VertexId x = first;
    do {
      rot.order[y].push_back(end_towards.at({y, x}));
      x = next[y].at(x);
    } while (x != first);
  }
}

}  // namespace pire

#include "pire/core/rotation.hpp"

#include <algorithm>

#include "pire/core/error.hpp"

namespace pire {

std::string rotation_problem(const Multigraph& g, const RotationSystem& rot) {
  if (rot.order.size() != g.vertex_count()) {
    return "rotation covers " + std::to_string(rot.order.size()) + " vertices, graph has " +
           std::to_string(g.vertex_count());
  }
  std::vector<std::uint8_t> seen(2 * g.edge_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& end : rot.order[v]) {
      if (end.edge >= g.edge_count() || end.side > 1) {
        return "rotation at '" + g.vertex_name(v) + "' references a missing edge-end";
      }
      if (g.vertex_of(end) != v) {
        return "rotation at '" + g.vertex_name(v) + "' lists an end of edge '" +
               g.edge(end.edge).name + "' that is not incident to it";
      }
      auto& s = seen[2 * end.edge + end.side];
      if (s) {
        return "edge-end (" + g.edge(end.edge).name + "," + std::to_string(end.side) +
               ") appears twice in the rotation";
      }
      s = 1;
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (Side s = 0; s < 2; ++s) {
      if (!seen[2 * e + s]) {
        return "edge-end (" + g.edge(e).name + "," + std::to_string(s) + ") missing from the rotation";
      }
    }
  }
  return {};
}

void validate_rotation(const Multigraph& g, const RotationSystem& rot) {
  if (auto problem = rotation_problem(g, rot); !problem.empty()) throw InputError(problem);
}

bool GenusReport::is_planar_embedding() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentGenus& c) { return c.genus == 0; });
}

std::size_t GenusReport::total_faces() const {
  std::size_t f = 0;
  for (const auto& c : components) f += c.faces;
  return f;
}

namespace {

// successor[2e+s] = the edge-end following (e,s) in the cyclic order at its vertex.
std::vector<EdgeEnd> successor_table(const Multigraph& g, const RotationSystem& rot) {
  std::vector<EdgeEnd> succ(2 * g.edge_count());
  for (const auto& cyc : rot.order) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto& cur = cyc[i];
      succ[2 * cur.edge + cur.side] = cyc[(i + 1) % cyc.size()];
    }
  }
  return succ;
}

}  // namespace

std::vector<std::vector<EdgeEnd>> trace_faces(const Multigraph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  const auto succ = successor_table(g, rot);
  std::vector<std::uint8_t> used(2 * g.edge_count(), 0);
  std::vector<std::vector<EdgeEnd>> faces;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (Side s = 0; s < 2; ++s) {
      if (used[2 * e + s]) continue;
      std::vector<EdgeEnd> face;
      EdgeEnd dart{e, s};
      while (!used[2 * dart.edge + dart.side]) {
        used[2 * dart.edge + dart.side] = 1;
        face.push_back(dart);
        dart = succ[2 * dart.edge + (1 - dart.side)];
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

GenusReport genus_check(const Multigraph& g, const RotationSystem& rot) {
  const auto faces = trace_faces(g, rot);
  const auto comps = connected_components(g);
  std::vector<std::size_t> comp_of(g.vertex_count());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto v : comps[c]) comp_of[v] = c;
  }
  GenusReport report;
  report.components.resize(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) report.components[c].vertices = comps[c].size();
  for (const auto& e : g.edges()) ++report.components[comp_of[e.end0]].edges;
  for (const auto& face : faces) ++report.components[comp_of[g.vertex_of(face.front())]].faces;
  for (auto& c : report.components) {
    if (c.edges == 0) c.faces = 1;  // an isolated vertex bounds one face
    const long twice = 2 - static_cast<long>(c.vertices) + static_cast<long>(c.edges) -
                       static_cast<long>(c.faces);
    c.genus = static_cast<int>(twice / 2);
  }
  return report;
}

EdgeId add_parallel_edge(Multigraph& g, RotationSystem& rot, EdgeId e, std::string name) {
  const Edge original = g.edge(e);
  const EdgeId f = g.add_edge(std::move(name), original.end0, original.end1);
  auto& at0 = rot.order.at(original.end0);
  auto it0 = std::find(at0.begin(), at0.end(), EdgeEnd{e, 0});
  at0.insert(it0 + 1, EdgeEnd{f, 0});
  auto& at1 = rot.order.at(original.end1);
  auto it1 = std::find(at1.begin(), at1.end(), EdgeEnd{e, 1});
  at1.insert(it1, EdgeEnd{f, 1});
  return f;
}

EdgeId add_loop(Multigraph& g, RotationSystem& rot, VertexId v, std::string name) {
  const EdgeId f = g.add_edge(std::move(name), v, v);
  rot.order.at(v).push_back({f, 0});
  rot.order.at(v).push_back({f, 1});
  return f;
}

void remove_edges(Multigraph& g, RotationSystem& rot, const std::vector<bool>& drop) {
  std::vector<EdgeId> renumber(g.edge_count(), 0);
  Multigraph rebuilt;
  for (const auto& name : g.vertex_names()) rebuilt.add_vertex(name);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (drop.at(e)) continue;
    renumber[e] = rebuilt.add_edge(g.edge(e).name, g.edge(e).end0, g.edge(e).end1);
  }
  for (auto& cyc : rot.order) {
    std::erase_if(cyc, [&](const EdgeEnd& end) { return drop.at(end.edge); });
    for (auto& end : cyc) end.edge = renumber[end.edge];
  }
  g = std::move(rebuilt);
}

}  // namespace pire

#include "pire/core/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pire/core/error.hpp"

namespace pire {

VertexId Multigraph::add_vertex(std::string name) {
  const auto id = static_cast<VertexId>(vertex_names_.size());
  if (!vertex_index_.emplace(name, id).second) {
    throw InputError("duplicate vertex id '" + name + "'");
  }
  vertex_names_.push_back(std::move(name));
  degree_.push_back(0);
  return id;
}

EdgeId Multigraph::add_edge(std::string name, VertexId end0, VertexId end1) {
  if (end0 >= vertex_count() || end1 >= vertex_count()) {
    throw InputError("edge '" + name + "' references a missing vertex");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  if (!edge_index_.emplace(name, id).second) {
    throw InputError("duplicate edge id '" + name + "'");
  }
  edges_.push_back({std::move(name), end0, end1});
  ++degree_[end0];
  ++degree_[end1];
  return id;
}

std::optional<VertexId> Multigraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Multigraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeEnd> Multigraph::ends_at(VertexId v) const {
  std::vector<EdgeEnd> ends;
  ends.reserve(degree(v));
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].end0 == v) ends.push_back({e, 0});
    if (edges_[e].end1 == v) ends.push_back({e, 1});
  }
  return ends;
}

std::vector<std::vector<EdgeEnd>> Multigraph::incidence() const {
  std::vector<std::vector<EdgeEnd>> inc(vertex_count());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    inc[edges_[e].end0].push_back({e, 0});
    inc[edges_[e].end1].push_back({e, 1});
  }
  return inc;
}

bool Multigraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::has_parallel_edges() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges_) {
    if (!seen.insert(std::minmax(e.end0, e.end1)).second) return true;
  }
  return false;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    VertexId a = find(e.end0), b = find(e.end1);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<VertexId>> comps;
  std::vector<std::size_t> slot(g.vertex_count(), SIZE_MAX);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexId r = find(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

bool edge_multiset_contains(const Multigraph& big, const Multigraph& small) {
  if (big.vertex_count() != small.vertex_count()) return false;
  std::map<std::pair<VertexId, VertexId>, long> count;
  for (const auto& e : big.edges()) ++count[std::minmax(e.end0, e.end1)];
  for (const auto& e : small.edges()) {
    if (--count[std::minmax(e.end0, e.end1)] < 0) return false;
  }
  return true;
}

std::vector<ThirdEdge> third_edges(const Multigraph& g) {
  std::vector<ThirdEdge> out;
  out.reserve(2 * g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.push_back({e, 0});
    out.push_back({e, 1});
  }
  return out;
}

}  // namespace pire

#include "pire/core/paired_graph.hpp"

#include <algorithm>
#include <set>

#include "pire/core/error.hpp"

namespace pire {

Pairing::Pairing(std::size_t vertex_count, const std::vector<std::array<VertexId, 2>>& pairs)
    : pair_of_(vertex_count, static_cast<PairId>(-1)) {
  if (2 * pairs.size() != vertex_count) {
    throw InputError("pairing has " + std::to_string(pairs.size()) + " pairs for " +
                     std::to_string(vertex_count) + " vertices");
  }
  pairs_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= vertex_count || b >= vertex_count) throw InputError("pairing references a missing vertex");
    if (a == b) throw InputError("pairing class must contain two distinct vertices");
    const auto p = static_cast<PairId>(pairs_.size());
    for (VertexId v : {a, b}) {
      if (pair_of_[v] != static_cast<PairId>(-1)) throw InputError("vertex appears in two pairs");
      pair_of_[v] = p;
    }
    pairs_.push_back({std::min(a, b), std::max(a, b)});
  }
}

VertexId Pairing::partner(VertexId v) const {
  const auto& p = pairs_.at(pair_of_.at(v));
  return p[0] == v ? p[1] : p[0];
}

bool is_degree_faithful(const PairedGraph& pg) {
  for (const auto& [a, b] : pg.pairing.pairs()) {
    if (pg.graph.degree(a) != pg.graph.degree(b)) return false;
  }
  return true;
}

bool has_planarity_certificate(const PairedGraph& pg) {
  if (!pg.rotation) return false;
  if (!rotation_problem(pg.graph, *pg.rotation).empty()) return false;
  return genus_check(pg.graph, *pg.rotation).is_planar_embedding();
}

void require_planarity_certificate(const PairedGraph& pg, const char* context) {
  if (!pg.rotation) throw DomainError(std::string(context) + ": planarity certificate (rotation) missing");
  if (auto problem = rotation_problem(pg.graph, *pg.rotation); !problem.empty()) {
    throw DomainError(std::string(context) + ": invalid rotation: " + problem);
  }
  if (!genus_check(pg.graph, *pg.rotation).is_planar_embedding()) {
    throw DomainError(std::string(context) + ": rotation system is not a planar embedding");
  }
}

Multigraph paired_quotient(const PairedGraph& pg) {
  Multigraph q;
  for (const auto& [a, b] : pg.pairing.pairs()) {
    q.add_vertex(pg.graph.vertex_name(a) + "+" + pg.graph.vertex_name(b));
  }
  for (const auto& e : pg.graph.edges()) {
    q.add_edge(e.name, pg.pairing.pair_of(e.end0), pg.pairing.pair_of(e.end1));
  }
  return q;
}

Multigraph simple_quotient(const PairedGraph& pg) {
  std::set<std::pair<PairId, PairId>> adjacent;
  for (const auto& e : pg.graph.edges()) {
    const PairId p = pg.pairing.pair_of(e.end0);
    const PairId q = pg.pairing.pair_of(e.end1);
    if (p != q) adjacent.insert(std::minmax(p, q));
  }
  Multigraph out;
  for (const auto& [a, b] : pg.pairing.pairs()) {
    out.add_vertex(pg.graph.vertex_name(a) + "+" + pg.graph.vertex_name(b));
  }
  for (const auto& [p, q] : adjacent) {
    out.add_edge(std::to_string(p) + "~" + std::to_string(q), p, q);
  }
  return out;
}

std::vector<std::vector<VertexId>> simple_adjacency(const Multigraph& g) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.end0].push_back(e.end1);
    adj[e.end1].push_back(e.end0);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

}  // namespace pire

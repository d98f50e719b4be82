#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pire/core/multigraph.hpp"
#include "pire/core/rotation.hpp"

namespace pire {

using PairId = std::uint32_t;

/// Partition of a vertex set into classes of size two. Members of each pair
/// are stored in ascending vertex order; pairs keep the order they were given.
class Pairing {
 public:
  Pairing() = default;
  /// Throws InputError unless `pairs` partitions 0..vertex_count-1 into
  /// classes of two distinct vertices.
  Pairing(std::size_t vertex_count, const std::vector<std::array<VertexId, 2>>& pairs);

  std::size_t size() const { return pairs_.size(); }
  const std::array<VertexId, 2>& pair(PairId p) const { return pairs_.at(p); }
  const std::vector<std::array<VertexId, 2>>& pairs() const { return pairs_; }
  PairId pair_of(VertexId v) const { return pair_of_.at(v); }
  VertexId partner(VertexId v) const;
  /// 0 for the smaller member of its pair, 1 for the larger.
  Side member_side(VertexId v) const { return pairs_[pair_of_.at(v)][0] == v ? 0 : 1; }

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::vector<std::array<VertexId, 2>> pairs_;
  std::vector<PairId> pair_of_;
};

struct PairedGraph {
  Multigraph graph;
  Pairing pairing;
  std::optional<RotationSystem> rotation;
};

/// Every two paired vertices have the same degree.
bool is_degree_faithful(const PairedGraph& pg);

/// True iff a rotation is present, structurally valid, and every component
/// has genus 0.
bool has_planarity_certificate(const PairedGraph& pg);

/// Throws DomainError unless has_planarity_certificate.
void require_planarity_certificate(const PairedGraph& pg, const char* context);

/// One vertex per pair (named "u+v", pair order), every edge kept with its
/// name; in-pair edges become loops.
Multigraph paired_quotient(const PairedGraph& pg);

/// paired_quotient without loops and with parallel edges collapsed. Edges are
/// ordered by (smaller pair, larger pair) and named "p~q".
Multigraph simple_quotient(const PairedGraph& pg);

/// Sorted neighbour lists of the simple graph underlying g (loops dropped,
/// parallels merged).
std::vector<std::vector<VertexId>> simple_adjacency(const Multigraph& g);

}  // namespace pire

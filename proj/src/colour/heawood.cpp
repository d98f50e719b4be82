#include "pire/colour/heawood.hpp"

#include <stdexcept>

#include "pire/core/error.hpp"

namespace pire {

EliminationOrder heawood_degeneracy_order(const PairedGraph& pg) {
  require_planarity_certificate(pg, "heawood_degeneracy_order");
  const auto adj = simple_adjacency(simple_quotient(pg));
  const std::size_t n = adj.size();
  std::vector<int> degree(n);
  for (std::size_t p = 0; p < n; ++p) degree[p] = static_cast<int>(adj[p].size());
  std::vector<std::uint8_t> removed(n, 0);

  EliminationOrder order;
  for (std::size_t step = 0; step < n; ++step) {
    PairId pick = 0;
    int best = -1;
    for (PairId p = 0; p < n; ++p) {
      if (!removed[p] && (best < 0 || degree[p] < best)) {
        pick = p;
        best = degree[p];
      }
    }
    if (best > 11) {
      throw std::logic_error("heawood_degeneracy_order: every remaining pair has degree >= 12 "
                             "in a certified planar map");
    }
    removed[pick] = 1;
    order.pairs.push_back(pick);
    order.degrees.push_back(best);
    for (auto q : adj[pick]) {
      if (!removed[q]) --degree[q];
    }
  }
  return order;
}

PairColouring heawood_colour_12(const PairedGraph& pg) {
  const auto order = heawood_degeneracy_order(pg);
  const auto adj = simple_adjacency(simple_quotient(pg));
  PairColouring c;
  c.palette_size = 12;
  c.colours.assign(pg.pairing.size(), -1);
  for (auto it = order.pairs.rbegin(); it != order.pairs.rend(); ++it) {
    std::uint16_t taken = 0;
    for (auto q : adj[*it]) {
      if (c.colours[q] >= 0) taken |= static_cast<std::uint16_t>(1u << c.colours[q]);
    }
    int colour = 0;
    while (colour < 12 && (taken >> colour & 1u)) ++colour;
    if (colour == 12) throw std::logic_error("heawood_colour_12: no free colour among 12");
    c.colours[*it] = colour;
  }
  return c;
}

}  // namespace pire

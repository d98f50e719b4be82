#include "pire/colour/colouring.hpp"

#include <string>

#include "pire/core/error.hpp"

namespace pire {

namespace {

template <class Carrier>
void check_complete(const Colouring<Carrier>& c, std::size_t carriers, const char* what) {
  if (c.colours.size() != carriers) {
    throw InputError(std::string(what) + " colouring covers " + std::to_string(c.colours.size()) +
                     " of " + std::to_string(carriers) + " carriers");
  }
  for (std::size_t i = 0; i < carriers; ++i) {
    if (c.colours[i] < 0) throw InputError(std::string(what) + " " + std::to_string(i) + " is uncoloured");
    if (c.colours[i] >= c.palette_size) {
      throw InputError(std::string(what) + " " + std::to_string(i) + " has colour outside the palette");
    }
  }
}

}  // namespace

bool is_valid_pair_colouring(const PairedGraph& pg, const PairColouring& c) {
  check_complete(c, pg.pairing.size(), "pair");
  for (const auto& e : pg.graph.edges()) {
    const PairId p = pg.pairing.pair_of(e.end0);
    const PairId q = pg.pairing.pair_of(e.end1);
    if (p != q && c.colours[p] == c.colours[q]) return false;
  }
  return true;
}

bool is_valid_complex_colouring(const TwoComplex& c, const ComplexColouring& col) {
  check_complete(col, c.skeleton.edge_count(), "edge");
  for (const auto& cell : c.cells) {
    const auto& steps = cell.steps;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const EdgeId in = steps[i].edge;
      const EdgeId out = steps[(i + 1) % steps.size()].edge;
      if (in != out && col.colours[in] == col.colours[out]) return false;
    }
  }
  return true;
}

bool is_valid_vertex_colouring(const Multigraph& g, const VertexColouring& c) {
  check_complete(c, g.vertex_count(), "vertex");
  for (const auto& e : g.edges()) {
    if (!e.is_loop() && c.colours[e.end0] == c.colours[e.end1]) return false;
  }
  return true;
}

}  // namespace pire

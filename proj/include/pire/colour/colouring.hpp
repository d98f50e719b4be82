#pragma once

#include <set>
#include <vector>

#include "pire/core/complex.hpp"
#include "pire/core/paired_graph.hpp"

namespace pire {

/// Assignment of palette indices 0..palette_size-1 to colour carriers. The
/// tag distinguishes what is being coloured.
template <class Carrier>
struct Colouring {
  int palette_size = 0;
  std::vector<int> colours;

  /// Number of distinct colours actually used.
  int used() const { return static_cast<int>(std::set<int>(colours.begin(), colours.end()).size()); }
  friend bool operator==(const Colouring&, const Colouring&) = default;
};

struct PairCarrier;
struct EdgeCarrier;
struct VertexCarrier;

/// Colours indexed by PairId.
using PairColouring = Colouring<PairCarrier>;
/// Colours indexed by skeleton EdgeId.
using ComplexColouring = Colouring<EdgeCarrier>;
/// Colours indexed by VertexId.
using VertexColouring = Colouring<VertexCarrier>;

/// Distinct pairs joined by an edge get distinct colours; edges inside one
/// pair (including loops) impose nothing. Throws InputError if a pair is
/// uncoloured or a colour lies outside the palette.
bool is_valid_pair_colouring(const PairedGraph& pg, const PairColouring& c);

/// Checked on the cell walks directly: whenever a walk leaves a vertex through
/// edge e' right after entering it through edge e, and e != e', the colours
/// differ. Throws InputError if an edge is uncoloured or out of palette.
bool is_valid_complex_colouring(const TwoComplex& c, const ComplexColouring& col);

/// Proper vertex colouring of the simple graph underlying g.
bool is_valid_vertex_colouring(const Multigraph& g, const VertexColouring& c);

}  // namespace pire

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pire/core/complex.hpp"
#include "pire/core/paired_graph.hpp"

namespace pire::testkit {

Multigraph complete_graph(std::size_t n);
Multigraph octahedron();
Multigraph petersen();

/// Skeleton = 3-cycle a,b,c; one cell going once around it.
TwoComplex triangle_complex();
/// Skeleton = K4, four triangular cells (boundary of the tetrahedron).
TwoComplex tetrahedron_complex();
/// One vertex, one loop, one cell traversing it once.
TwoComplex one_loop_complex();

/// Every skeleton with at most `max_edges` edges and no isolated vertices (up
/// to isomorphism, plus the single vertex with no edges), each with every
/// multiset of at most `max_cells` genuine cells whose walks have length at
/// most `max_length` (cells taken up to rotation and reversal).
/// Returns the number of complexes visited.
std::size_t for_each_small_complex(std::size_t max_edges, std::size_t max_cells, std::size_t max_length,
                                   const std::function<void(const TwoComplex&)>& visit);

/// Random complex on a random multigraph with up to `max_edges` edges and
/// random closed walks as cells.
TwoComplex random_complex(std::uint64_t seed, std::size_t max_edges, std::size_t max_cells,
                          std::size_t max_length);

/// G(n, p) with n vertices.
Multigraph random_graph(std::uint64_t seed, std::size_t n, double p);

}  // namespace pire::testkit

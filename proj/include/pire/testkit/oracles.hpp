#pragma once

#include "pire/core/multigraph.hpp"

namespace pire::testkit {

/// Chromatic number by trying k = 0, 1, ... and enumerating every assignment
/// of k colours to the vertices. Only for tiny graphs (n <= 8).
int naive_chromatic_number(const Multigraph& g);

/// Minimum degree of the simple graph underlying g (0 for the empty graph).
std::size_t min_simple_degree(const Multigraph& g);

}  // namespace pire::testkit

#pragma once

#include <string>

#include "pire/core/paired_graph.hpp"

namespace pire {

/// Graphviz export. Parallel edges and loops are emitted individually.
std::string to_dot(const Multigraph& g, const std::string& graph_name = "G");

/// Same, with both members of each pair drawn with the same border colour.
std::string to_dot(const PairedGraph& pg, const std::string& graph_name = "G");

}  // namespace pire

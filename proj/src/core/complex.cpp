#include "pire/core/complex.hpp"

#include "pire/core/error.hpp"

namespace pire {

void validate_complex(const TwoComplex& c) {
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    if (auto problem = closed_walk_problem(c.skeleton, c.cells[i]); !problem.empty()) {
      throw InputError("cell " + std::to_string(i) + ": " + problem);
    }
  }
}

bool is_simplicial(const TwoComplex& c) {
  const auto& g = c.skeleton;
  if (g.has_loops() || g.has_parallel_edges()) return false;
  for (const auto& cell : c.cells) {
    if (cell.length() != 3) return false;
    const auto& s = cell.steps;
    if (s[0].edge == s[1].edge || s[1].edge == s[2].edge || s[0].edge == s[2].edge) return false;
    const VertexId a = g.vertex_of(s[0].entry_third());
    const VertexId b = g.vertex_of(s[1].entry_third());
    const VertexId d = g.vertex_of(s[2].entry_third());
    if (a == b || b == d || a == d) return false;
  }
  return true;
}

}  // namespace pire

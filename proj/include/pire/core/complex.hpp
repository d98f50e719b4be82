#pragma once

#include <vector>

#include "pire/core/multigraph.hpp"
#include "pire/core/walk.hpp"

namespace pire {

enum class CellKind { genuine, punctured };

/// A 2-complex given combinatorially: a skeleton and one closed gluing walk
/// per cell. Punctured complexes carry identical data.
struct TwoComplex {
  Multigraph skeleton;
  std::vector<Walk> cells;
  CellKind kind = CellKind::genuine;
};

/// Throws InputError unless every cell is a nonempty closed walk in the
/// skeleton.
void validate_complex(const TwoComplex& c);

/// Simple skeleton and every cell goes once around a triangle.
bool is_simplicial(const TwoComplex& c);

}  // namespace pire

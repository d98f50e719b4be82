#include "pire/construct/seal.hpp"

#include <array>

#include "pire/core/error.hpp"

namespace pire {

TwoComplex seal(const TwoComplex& c) {
  validate_complex(c);
  TwoComplex out;
  out.skeleton = c.skeleton;
  out.kind = CellKind::genuine;
  for (const auto& w : c.cells) {
    if (w.steps.empty()) throw InputError("seal: empty cell walk");
    const Walk first{{w.steps.front()}};
    const std::array<Walk, 4> parts = {w, first, walk_reverse(first), walk_reverse(w)};
    out.cells.push_back(walk_concat(c.skeleton, parts));
  }
  return out;
}

}  // namespace pire

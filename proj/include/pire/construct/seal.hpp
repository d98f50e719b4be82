#pragma once

#include "pire/core/complex.hpp"

namespace pire {

/// Replaces each punctured cell walk W by W U U^- W^-, where U is the first
/// step of W. The result is a genuine complex on the same skeleton with walk
/// lengths 2|W| + 2. Throws InputError on an empty walk.
TwoComplex seal(const TwoComplex& c);

}  // namespace pire

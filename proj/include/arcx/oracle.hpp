// Brute-force extension decisions for tiny instances, used as ground truth.
#pragma once

#include "arcx/core.hpp"
#include "arcx/extension.hpp"
#include "arcx/verify.hpp"

namespace arcx {

struct OracleBounds {
  int max_free = 3;
  int max_anchors = 12;
};

/// Tries every cyclic arrangement (with coincidences) of the new endpoints among the
/// predrawn ones, realizes it with rational coordinates and runs check(). Returns the
/// first verified witness. Throws Error(BoundsExceeded) beyond `bounds`, and
/// Error(InvalidInput) for UCA, whose lengths are not combinatorial.
Extension oracle_extend(const Graph& g, const PartialRepresentation& partial, RepClass cls,
                        OracleBounds bounds = {});

}  // namespace arcx

// Extension of partial Helly circular-arc representations whose predrawn arcs have
// pairwise distinct endpoints.
#pragma once

#include <cstddef>

#include "arcx/core.hpp"
#include "arcx/extension.hpp"

namespace arcx {

/// Throws Error(SharedEndpoints) if two predrawn endpoints coincide.
Extension solve_hca_distinct(const Graph& g, const PartialRepresentation& partial);

/// Islands of the anchor clique's region, one trial each; 0 if the instance is
/// decided before any trial.
std::size_t hca_anchor_islands(const Graph& g, const PartialRepresentation& partial);
/// The trial with the anchor clique's point in the given island.
Extension solve_hca_from_island(const Graph& g, const PartialRepresentation& partial, std::size_t island);

}  // namespace arcx

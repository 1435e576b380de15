// Extension of partial normal Helly circular-arc representations.
#pragma once

#include <optional>
#include <vector>

#include "arcx/cliques.hpp"
#include "arcx/core.hpp"
#include "arcx/extension.hpp"
#include "arcx/regions.hpp"
#include "arcx/verify.hpp"

namespace arcx {

Extension solve_nhca(const Graph& g, const PartialRepresentation& partial);

/// The branch for graphs with a universal vertex: some point of the circle stays
/// uncovered, so each predrawn-free stretch is tried as the cut of a line instance.
Extension solve_with_universal(const Graph& g, const PartialRepresentation& partial);
/// The same with one given cut point, which must avoid every predrawn arc.
Extension solve_with_universal_at(const Graph& g, const PartialRepresentation& partial, const CirclePoint& cut);

/// Clique points along `order`, strictly increasing clockwise from `anchor`. With
/// `anchor_first` the first clique sits on the anchor itself. Result indexed by clique id.
/// Throws Error(PlacementFailed) if some clique has no room left.
std::vector<CirclePoint> greedy_place(const LinearOrder& order, const RegionMap& rm, const Rational& eps,
                                      const CirclePoint& anchor, bool anchor_first);

/// Predrawn arcs as given; every other vertex gets the shortest arc over the clique
/// points of its cliques, which must be consecutive in `order`.
Representation draw_new_arcs(const std::vector<CirclePoint>& points, const LinearOrder& order,
                             const CliqueStructure& cs, const PartialRepresentation& partial);

/// Moves the endpoints of non-predrawn arcs off the clique points, tails backwards and
/// heads forwards by distinct small amounts, so no two endpoints coincide and no arc
/// is a single point. Intersections between arcs are unchanged. `keep_clear` lists
/// further points the shifts must stay away from.
Representation separate_new_endpoints(const Representation& r, const PartialRepresentation& partial,
                                      const std::vector<CirclePoint>& keep_clear);

/// greedy_place, draw_new_arcs and separate_new_endpoints in a row; nullopt if the
/// result fails check() for `cls`.
std::optional<Representation> realize_order(const Graph& g, const PartialRepresentation& partial,
                                            const CliqueStructure& cs, const RegionMap& rm, const LinearOrder& order,
                                            const CirclePoint& anchor, bool anchor_first, RepClass cls);

}  // namespace arcx

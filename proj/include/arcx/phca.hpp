// Extension of partial proper Helly representations.
#pragma once

#include <utility>
#include <vector>

#include "arcx/core.hpp"
#include "arcx/extension.hpp"

namespace arcx {

/// The circle cut by two crossing arcs R(u), R(v): A and B are the closed components of
/// R(u) ∩ R(v), C = R(u) ∖ R(v) and D = R(v) ∖ R(u) are open.
struct CircleSections {
  Arc a;
  Arc b;
  /// Closures of the open sections.
  Arc c;
  Arc d;

  static CircleSections of(const Arc& u, const Arc& v);
};

/// Predrawn pairs whose intersection has two components, in increasing order.
std::vector<std::pair<VertexId, VertexId>> non_normal_pairs(const PartialRepresentation& partial);

Extension solve_phca(const Graph& g, const PartialRepresentation& partial);

}  // namespace arcx

// Extension of partial normal proper Helly representations.
#pragma once

#include <optional>
#include <vector>

#include "arcx/core.hpp"
#include "arcx/extension.hpp"
#include "arcx/pctree.hpp"

namespace arcx {

struct TwinReduction {
  Graph graph;
  PartialRepresentation partial;
  /// kept[i] is the original vertex behind reduced vertex i.
  std::vector<VertexId> kept;
  /// source[v] is the original kept vertex whose arc v copies (v itself when kept).
  std::vector<VertexId> source;

  /// Lifts a representation of the reduced graph back to the original vertex set.
  Representation expand(const Representation& reduced) const;
};

/// Leaves one vertex per non-predrawn twin class, and one vertex per distinct predrawn
/// arc in a class that has predrawn members.
TwinReduction prune_twins(const Graph& g, const PartialRepresentation& partial);

/// PC-tree whose represented orders are exactly the consecutive cyclic orderings of V.
std::optional<PCTree> consecutive_ordering_tree(const Graph& g);

/// Pairs (i, j) of predrawn arcs with h_i = t_j.
using TouchingPairs = std::vector<std::pair<VertexId, VertexId>>;
TouchingPairs touching_pairs(const PartialRepresentation& partial);

/// Like consecutive_ordering_tree, but also requires N[u] ∩ N[v] to be consecutive for
/// every edge uv. Plain consecutiveness admits orders such as [0,3,1,2] for the path
/// 0-3-2-1 that no proper representation has as its tail order. For each touching pair
/// (i, j), N[i] ∩ N[j] must be a block with ends i and j, ending N[i] and starting N[j].
std::optional<PCTree> tail_ordering_tree(const Graph& g, const TouchingPairs& touching = {});

/// A tail ordering of V extending the cyclic order `tail_order` of the predrawn vertices,
/// in which every touching pair (i, j) has N[i] ∩ N[j] running forward from i to j.
/// The result starts with tail_order[0] when that is nonempty.
std::optional<std::vector<VertexId>> consecutive_cyclic_ordering(const Graph& g,
                                                                 const std::vector<VertexId>& tail_order,
                                                                 const TouchingPairs& touching = {});

/// Touching predrawn arcs h_i = t_j need N[v_i] to end at v_j and N[v_j] to start at v_i.
/// Also rejects any other coincidence of predrawn endpoints.
bool check_touching(const Graph& g, const PartialRepresentation& partial, const std::vector<VertexId>& ord);

struct EndpointToken {
  VertexId vertex;
  bool head;
  friend bool operator==(const EndpointToken&, const EndpointToken&) = default;
};
/// Cyclic sequence of all 2n tails and heads.
using EndpointOrder = std::vector<EndpointToken>;

/// The head of a non-universal v goes right before the tail after its last neighbor;
/// the head of a universal v goes right before the tail of the farthest-back
/// non-universal vertex whose forward neighborhood reaches v. Requires G not complete.
/// A predrawn universal head instead goes to the latest admissible slot that keeps the
/// predrawn tails inside and outside its arc on the correct sides.
EndpointOrder build_endpoint_order(const Graph& g, const std::vector<VertexId>& ord,
                                   const PartialRepresentation& partial = {});

/// Keeps predrawn endpoints and spreads the others evenly over the gaps between them.
/// Throws Error(OrderMismatch) if the order disagrees with the predrawn geometry.
Representation place_endpoints(const EndpointOrder& eo, const PartialRepresentation& partial, int n);

Extension solve_nphca(const Graph& g, const PartialRepresentation& partial);

}  // namespace arcx

// Maximal cliques, per-vertex clique memberships and universal pairs.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arcx/core.hpp"

namespace arcx {

using CliqueId = int;

struct CliqueStructure {
  /// Sorted vertex lists, sorted lexicographically.
  std::vector<std::vector<VertexId>> cliques;
  /// membership[v] = sorted ids of the cliques containing v (M_v).
  std::vector<std::vector<CliqueId>> membership;
  std::vector<VertexId> universal_vertices;
  /// Adjacent (u, w), u < w, with N[u] ∪ N[w] = V.
  std::vector<std::pair<VertexId, VertexId>> universal_pairs;

  int clique_count() const { return static_cast<int>(cliques.size()); }
};

/// Bron–Kerbosch with pivoting over a degeneracy order. Returns nullopt as soon as
/// more than `limit` maximal cliques are found.
std::optional<std::vector<std::vector<VertexId>>> maximal_cliques(const Graph& g, std::size_t limit);

/// All maximal cliques plus memberships. Throws Error(NotHellyCandidate) if G has
/// more than n maximal cliques, since such a graph has no Helly representation.
CliqueStructure enumerate_maximal_cliques(const Graph& g);

std::vector<std::pair<VertexId, VertexId>> universal_pairs(const Graph& g);

/// True iff every M_v is cyclically consecutive in `order` (a permutation of clique ids).
bool gavril_check(const CliqueStructure& cs, const std::vector<CliqueId>& order);

}  // namespace arcx

// Where each maximal clique's clique point may go, given the predrawn arcs.
//
// The distinct predrawn endpoints p_0 < ... < p_{m-1} cut the circle into 2m pieces:
// piece 2i is the point p_i and piece 2i+1 the open span (p_i, p_{i+1}). Every predrawn
// arc is a union of pieces, so every region is one too. With no predrawn arcs there is
// a single piece, the whole circle.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcx/cliques.hpp"
#include "arcx/core.hpp"
#include "arcx/pctree.hpp"

namespace arcx {

/// A connected piece of the circle from `from` to `to` clockwise.
struct Island {
  CirclePoint from;
  CirclePoint to;
  bool from_closed = true;
  bool to_closed = true;
  bool full = false;

  Rational length() const;
  bool single_point() const { return !full && from == to && from_closed && to_closed; }
  CirclePoint middle() const;
};

/// Part of a region after cutting the circle at an anchor; coordinates in [0, 1).
struct LinearSpan {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;
};

struct RegionMap {
  /// Cliques with the same predrawn members share one region.
  struct Class {
    std::vector<VertexId> pre;
    std::vector<int> pieces;
    std::vector<CliqueId> cliques;
    std::vector<Island> islands;
  };

  std::vector<Rational> points;
  std::vector<Class> classes;
  std::vector<int> class_of;
  /// Class owning each piece, or -1.
  std::vector<int> piece_class;
  /// Number of predrawn arcs containing each piece.
  std::vector<int> cover_size;

  int piece_count() const { return static_cast<int>(piece_class.size()); }
  int piece_at(const CirclePoint& p) const;
  /// Island formed by the cyclic run of pieces first..last.
  Island run_span(int first, int last) const;
  /// Region of a class cut open at `anchor`, sorted, adjacent spans merged.
  std::vector<LinearSpan> linearized(int cls, const CirclePoint& anchor) const;
  const Class& region_of(CliqueId c) const { return classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(c)])]; }
};

/// nullopt when some clique has an empty region. Every map returned is also checked
/// against the two region laws, with the outcome tallied in region_law_stats().
std::optional<RegionMap> compute_regions(const CliqueStructure& cs, const PartialRepresentation& partial);

/// Regions of different classes are disjoint, and each lies inside a single gap of
/// every other. Returns the number of ordered class pairs breaking either law.
std::size_t region_law_violations(const RegionMap& rm);

struct RegionLawStats {
  std::uint64_t maps = 0;
  std::uint64_t violations = 0;
};
/// Totals over every compute_regions call in this process.
RegionLawStats region_law_stats();

/// A clique whose region is one island, preferring the most predrawn members.
std::optional<CliqueId> single_island_clique(const RegionMap& rm);

/// Shortest island of positive length divided by 2n+1. Throws Error(NoNontrivialIsland).
Rational epsilon(const RegionMap& rm, int n);
/// Shortest open piece divided by 4n+2. Each greedy step advances at most twice this,
/// so n steps stay within half of any piece.
Rational placement_epsilon(const RegionMap& rm, int n);

/// C before C' whenever all of Reg(C) lies before all of Reg(C') clockwise from `anchor`.
PartialPrec linear_prec(const RegionMap& rm, const CirclePoint& anchor);

/// linear_prec at p_D with D placed first: pairs (D, C) for all C, none into D.
PartialPrec build_prec(const RegionMap& rm, CliqueId d, const CirclePoint& p_d);

struct GapSet {
  int cls = -1;
  int first = 0;
  int last = 0;
  std::vector<CliqueId> cliques;

  bool contains_piece(int piece, int piece_count) const;
};

/// One entry per gap of every region: the cliques whose regions lie in that gap.
/// Throws std::logic_error if a region meets two gaps of another.
std::vector<GapSet> gap_sets(const RegionMap& rm);

}  // namespace arcx

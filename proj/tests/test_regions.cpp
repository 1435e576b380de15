#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "arcx/cliques.hpp"
#include "arcx/errors.hpp"
#include "arcx/generate.hpp"
#include "arcx/regions.hpp"
#include "util.hpp"

using namespace arcx;
using namespace arcx::test;

namespace {

RegionMap regions(const Graph& g, const PartialRepresentation& p) {
  auto rm = compute_regions(enumerate_maximal_cliques(g), p);
  EXPECT_TRUE(rm);
  return rm ? *rm : RegionMap{};
}

bool in_region(const RegionMap& rm, CliqueId c, const CirclePoint& p) {
  return rm.piece_class[static_cast<std::size_t>(rm.piece_at(p))] == rm.class_of[static_cast<std::size_t>(c)];
}

/// Path 2-0-1 with 0 = [0,1/2] and 1 = [1/4,3/8]; clique 1 is {0,2}.
PartialRepresentation hole_partial() {
  PartialRepresentation p;
  p.set(0, arc("0", "1/2"));
  p.set(1, arc("1/4", "3/8"));
  return p;
}

Graph hole_graph() { return Graph(3, {{0, 1}, {0, 2}}); }

PartialRepresentation keep_some(const Representation& r, Rng& rng) {
  std::vector<VertexId> kept;
  for (VertexId v = 0; v < r.size(); ++v)
    if (rng() % 2) kept.push_back(v);
  return r.restrict_to(kept);
}

}  // namespace

TEST(Regions, NoPredrawnIsTheWholeCircle) {
  RegionMap rm = regions(cycle(5), {});
  ASSERT_EQ(rm.classes.size(), 1u);
  ASSERT_EQ(rm.classes[0].islands.size(), 1u);
  EXPECT_TRUE(rm.classes[0].islands[0].full);
  EXPECT_EQ(rm.classes[0].cliques.size(), 5u);
  EXPECT_TRUE(gap_sets(rm).empty());
}

TEST(Regions, HoleSplitsTheRegion) {
  RegionMap rm = regions(hole_graph(), hole_partial());
  const auto& cls = rm.region_of(1);
  ASSERT_EQ(cls.islands.size(), 2u);
  EXPECT_TRUE(in_region(rm, 1, CirclePoint(q("0"))));
  EXPECT_TRUE(in_region(rm, 1, CirclePoint(q("1/8"))));
  EXPECT_FALSE(in_region(rm, 1, CirclePoint(q("1/4"))));
  EXPECT_FALSE(in_region(rm, 1, CirclePoint(q("3/8"))));
  EXPECT_TRUE(in_region(rm, 1, CirclePoint(q("1/2"))));
  EXPECT_FALSE(in_region(rm, 1, CirclePoint(q("3/4"))));
  for (const Island& i : cls.islands) {
    if (i.from == CirclePoint(q("0"))) {
      EXPECT_TRUE(i.from_closed);
      EXPECT_EQ(i.to, CirclePoint(q("1/4")));
      EXPECT_FALSE(i.to_closed);
    } else {
      EXPECT_EQ(i.from, CirclePoint(q("3/8")));
      EXPECT_FALSE(i.from_closed);
      EXPECT_EQ(i.to, CirclePoint(q("1/2")));
      EXPECT_TRUE(i.to_closed);
    }
  }
}

TEST(Regions, EmptyRegionIsReported) {
  // 0 and 2 are not adjacent, yet 2's arc swallows 0's.
  PartialRepresentation p;
  p.set(0, arc("1/4", "3/8"));
  p.set(2, arc("0", "1/2"));
  EXPECT_FALSE(compute_regions(enumerate_maximal_cliques(path(3)), p));
}

TEST(Regions, SingleIslandClique) {
  EXPECT_TRUE(single_island_clique(regions(cycle(4), {})));
  RegionMap rm = regions(hole_graph(), hole_partial());
  auto d = single_island_clique(rm);
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, 0);
  EXPECT_EQ(rm.region_of(*d).islands.size(), 1u);
}

TEST(Regions, CrossingPairHasNoSingleIsland) {
  // K2 drawn as two arcs covering the circle: the only region is two points.
  PartialRepresentation p;
  p.set(0, arc("0", "1/2"));
  p.set(1, arc("1/2", "0"));
  RegionMap rm = regions(complete(2), p);
  EXPECT_FALSE(single_island_clique(rm));
  EXPECT_THROW(epsilon(rm, 2), Error);
}

TEST(Regions, Epsilon) {
  EXPECT_EQ(epsilon(regions(cycle(4), {}), 4), q("1/9"));
  PartialRepresentation p;
  p.set(0, arc("0", "1/10"));
  EXPECT_EQ(epsilon(regions(complete(2), p), 2), q("1/50"));
}

TEST(Regions, PrecOnDisjointRegions) {
  // Path 0-1-2 with 0 and 2 drawn apart; cliques {0,1} and {1,2}.
  PartialRepresentation p;
  p.set(0, arc("0", "1/4"));
  p.set(2, arc("1/2", "3/4"));
  RegionMap rm = regions(path(3), p);
  EXPECT_EQ(linear_prec(rm, CirclePoint(q("7/8"))), (PartialPrec{{0, 1}}));
  EXPECT_EQ(linear_prec(rm, CirclePoint(q("3/8"))), (PartialPrec{{1, 0}}));
  PartialPrec anchored = build_prec(rm, 1, CirclePoint(q("5/8")));
  EXPECT_EQ(anchored, (PartialPrec{{1, 0}}));
}

TEST(Regions, InterleavedRegionsAreIncomparable) {
  RegionMap rm = regions(hole_graph(), hole_partial());
  EXPECT_TRUE(linear_prec(rm, CirclePoint(q("7/8"))).empty());
  PartialPrec anchored = build_prec(rm, 0, CirclePoint(q("5/16")));
  EXPECT_EQ(anchored, (PartialPrec{{0, 1}}));
}

TEST(Regions, GapSetsOfTwoClasses) {
  PartialRepresentation p;
  p.set(0, arc("0", "1/4"));
  p.set(2, arc("1/2", "3/4"));
  RegionMap rm = regions(path(3), p);
  auto gaps = gap_sets(rm);
  ASSERT_EQ(gaps.size(), 2u);
  for (const GapSet& gap : gaps) {
    ASSERT_EQ(gap.cliques.size(), 1u);
    EXPECT_NE(gap.cliques[0], rm.classes[static_cast<std::size_t>(gap.cls)].cliques[0]);
  }
}

TEST(Regions, LinearizedSplitsAtTheAnchor) {
  RegionMap rm = regions(cycle(4), {});
  auto spans = rm.linearized(0, CirclePoint(q("1/3")));
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].lo, 0);
  EXPECT_TRUE(spans[0].lo_closed);
  EXPECT_EQ(spans[0].hi, 1);
  EXPECT_FALSE(spans[0].hi_closed);

  RegionMap hole = regions(hole_graph(), hole_partial());
  auto two = hole.linearized(hole.class_of[1], CirclePoint(q("1/8")));
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0].lo, 0);
  EXPECT_EQ(two[0].hi, q("1/8"));
  EXPECT_EQ(two[2].lo, q("7/8"));
}

TEST(Regions, StructureOnRandomRepresentations) {
  Rng rng(41);
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    int n = 3 + static_cast<int>(rng() % 9);
    Representation r = it % 2 ? random_nhca(n, rng) : random_hca_distinct(n, rng);
    Graph g = intersection_graph(r);
    PartialRepresentation p = keep_some(r, rng);
    CliqueStructure cs = enumerate_maximal_cliques(g);
    auto rm = compute_regions(cs, p);
    ASSERT_TRUE(rm) << "iteration " << it;
    // Equal or disjoint: every piece has one owner, and cliques with equal Pre share it.
    for (std::size_t c = 0; c < cs.cliques.size(); ++c)
      for (std::size_t d = 0; d < cs.cliques.size(); ++d)
        if (rm->class_of[c] != rm->class_of[d])
          EXPECT_NE(rm->region_of(static_cast<CliqueId>(c)).pre, rm->region_of(static_cast<CliqueId>(d)).pre);
    // Each region lies in one gap of every other region.
    ASSERT_NO_THROW(gap_sets(*rm));
    // Every clique point of the full drawing lies in its clique's region.
    for (std::size_t c = 0; c < cs.cliques.size(); ++c) {
      std::optional<CirclePoint> point;
      for (VertexId v : cs.cliques[c]) {
        const CirclePoint& t = r[v].tail;
        if (std::all_of(cs.cliques[c].begin(), cs.cliques[c].end(), [&](VertexId w) { return arc_contains(r[w], t); }))
          point = t;
      }
      ASSERT_TRUE(point);
      EXPECT_TRUE(in_region(*rm, static_cast<CliqueId>(c), *point)) << "iteration " << it;
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Regions, LawCheckerFlagsOverlapAndSplitting) {
  RegionMap rm = regions(hole_graph(), hole_partial());
  EXPECT_EQ(region_law_violations(rm), 0u);
  RegionMap overlap = rm;
  const int c0 = rm.class_of[0], c1 = rm.class_of[1];
  overlap.classes[static_cast<std::size_t>(c0)].pieces.push_back(rm.classes[static_cast<std::size_t>(c1)].pieces.front());
  EXPECT_GT(region_law_violations(overlap), 0u);

  // The clique of 0 and 2 spread over both sides of the clique of 0 and 1.
  RegionMap split = rm;
  auto& big = split.classes[static_cast<std::size_t>(c1)].pieces;
  auto& small = split.classes[static_cast<std::size_t>(c0)].pieces;
  small.push_back(big.front());
  big.erase(big.begin());
  EXPECT_GT(region_law_violations(split), 0u);
  EXPECT_GT(region_law_stats().maps, 0u);
}

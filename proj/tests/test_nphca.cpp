#include <gtest/gtest.h>

#include <set>

#include "arcx/errors.hpp"
#include "arcx/generate.hpp"
#include "arcx/nphca.hpp"
#include "arcx/verify.hpp"
#include "util.hpp"

using namespace arcx;
using namespace arcx::test;

namespace {

EndpointToken T(VertexId v) { return {v, false}; }
EndpointToken H(VertexId v) { return {v, true}; }

Graph diamond() {
  Graph g = complete(4);
  Graph d(4);
  for (auto [a, b] : g.edges())
    if (!(a == 0 && b == 3)) d.add_edge(a, b);
  return d;
}

}  // namespace

TEST(PruneTwins, TriangleWithOnePredrawn) {
  PartialRepresentation p;
  p.set(1, arc("0", "1/4"));
  TwinReduction tr = prune_twins(complete(3), p);
  EXPECT_EQ(tr.kept, std::vector<VertexId>{1});
  EXPECT_EQ(tr.source, (std::vector<VertexId>{1, 1, 1}));
  Representation r = tr.expand(Representation({arc("0", "1/4")}));
  EXPECT_EQ(r.size(), 3);
  for (const Arc& a : r.arcs()) EXPECT_EQ(a, arc("0", "1/4"));
}

TEST(PruneTwins, EqualPredrawnArcsCollapse) {
  PartialRepresentation p;
  p.set(0, arc("0", "1/4"));
  p.set(1, arc("0", "1/4"));
  EXPECT_EQ(prune_twins(complete(2), p).kept.size(), 1u);
  p.set(1, arc("1/8", "3/8"));
  EXPECT_EQ(prune_twins(complete(2), p).kept.size(), 2u);
}

TEST(PruneTwins, NoTwinsIsIdentity) {
  TwinReduction tr = prune_twins(cycle(5), {});
  EXPECT_EQ(tr.kept, (std::vector<VertexId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(tr.graph, cycle(5));
}

TEST(ConsecutiveOrdering, C5IsTheCycle) {
  auto ord = consecutive_cyclic_ordering(cycle(5), {});
  ASSERT_TRUE(ord);
  std::vector<VertexId> fwd{0, 1, 2, 3, 4}, rev{4, 3, 2, 1, 0};
  EXPECT_TRUE(same_cyclic(*ord, fwd) || same_cyclic(*ord, rev));
}

TEST(ConsecutiveOrdering, OctahedronHasBothOrders) {
  // Complement of the matching {0,3},{1,4},{2,5}.
  Graph g(6);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (b - a != 3) g.add_edge(a, b);
  auto tree = consecutive_ordering_tree(g);
  ASSERT_TRUE(tree);
  auto orders = tree->enumerate_orders(1000);
  std::set<CyclicOrder> all;
  for (const auto& o : orders) {
    all.insert(o);
    all.insert(o.reversed());
  }
  EXPECT_TRUE(all.count(CyclicOrder({0, 1, 2, 3, 4, 5})));
  EXPECT_TRUE(all.count(CyclicOrder({0, 2, 1, 3, 5, 4})));
}

TEST(ConsecutiveOrdering, PredrawnOutOfPathOrder) {
  Graph g = path(7);
  EXPECT_TRUE(consecutive_cyclic_ordering(g, {0, 2, 4, 6}));
  EXPECT_TRUE(consecutive_cyclic_ordering(g, {0, 6, 4, 2}));
  EXPECT_FALSE(consecutive_cyclic_ordering(g, {0, 4, 2, 6}));

  PartialRepresentation p;
  p.set(0, arc("0", "1/16"));
  p.set(4, arc("1/4", "5/16"));
  p.set(2, arc("1/2", "9/16"));
  p.set(6, arc("3/4", "13/16"));
  EXPECT_FALSE(solve_nphca(g, p).ok());
}

TEST(CheckTouching, Cases) {
  Graph d = diamond();
  std::vector<VertexId> ord{0, 1, 2, 3};
  EXPECT_TRUE(check_touching(d, {}, ord));

  PartialRepresentation bad;
  bad.set(0, arc("0", "1/4"));
  bad.set(1, arc("1/4", "1/2"));
  EXPECT_FALSE(check_touching(d, bad, ord));

  PartialRepresentation universal;
  universal.set(1, arc("0", "1/4"));
  universal.set(2, arc("1/4", "1/2"));
  EXPECT_TRUE(check_touching(d, universal, ord));

  PartialRepresentation path_ok;
  path_ok.set(0, arc("0", "1/4"));
  path_ok.set(1, arc("1/4", "1/2"));
  EXPECT_TRUE(check_touching(path(4), path_ok, ord));
}

TEST(EndpointOrder, P3) {
  EndpointOrder eo = build_endpoint_order(path(3), {0, 1, 2});
  EndpointOrder want{T(0), T(1), H(0), T(2), H(1), H(2)};
  EXPECT_TRUE(same_cyclic(eo, want));
}

TEST(EndpointOrder, C4HeadsBeforeTailTwoAhead) {
  EndpointOrder eo = build_endpoint_order(cycle(4), {0, 1, 2, 3});
  ASSERT_EQ(eo.size(), 8u);
  for (VertexId i = 0; i < 4; ++i) {
    auto at = std::find(eo.begin(), eo.end(), H(i)) - eo.begin();
    EXPECT_EQ(eo[static_cast<std::size_t>((at + 1) % 8)], T((i + 2) % 4));
  }
}

TEST(PlaceEndpoints, RegularWithoutPredrawn) {
  Representation r = place_endpoints({T(0), H(1), T(1), H(0)}, {}, 2);
  EXPECT_EQ(r[0], arc("0", "3/4"));
  EXPECT_EQ(r[1], arc("1/2", "1/4"));
}

TEST(PlaceEndpoints, ThirdsOfASpan) {
  PartialRepresentation p;
  p.set(0, arc("0", "1/2"));
  Representation r = place_endpoints({T(0), H(0), T(1), H(1)}, p, 2);
  EXPECT_EQ(r[0], arc("0", "1/2"));
  EXPECT_EQ(r[1], arc("2/3", "5/6"));
}

TEST(PlaceEndpoints, MismatchThrows) {
  PartialRepresentation p;
  p.set(0, arc("0", "1/2"));
  p.set(1, arc("1/4", "3/4"));
  try {
    place_endpoints({T(0), H(0), T(1), H(1)}, p, 2);
    FAIL() << "expected OrderMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderMismatch);
  }
}

TEST(SolveNphca, C5RoundTrip) {
  Graph g = cycle(5);
  Extension ext = solve_nphca(g, {});
  ASSERT_TRUE(ext.ok()) << ext.reason;
  EXPECT_TRUE(check(g, *ext.representation, {}, RepClass::NPHCA).ok());
}

TEST(SolveNphca, CompleteReplicatesPredrawn) {
  PartialRepresentation p;
  p.set(2, arc("1/3", "1/2"));
  Extension ext = solve_nphca(complete(5), p);
  ASSERT_TRUE(ext.ok());
  for (const Arc& a : ext.representation->arcs()) EXPECT_EQ(a, arc("1/3", "1/2"));
}

TEST(SolveNphca, WheelHasNoRepresentation) {
  EXPECT_FALSE(solve_nphca(wheel(4), {}).ok());
}

TEST(SolveNphca, DisconnectedThrows) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(solve_nphca(g, {}), Error);
}

TEST(SolveNphca, InvalidPredrawnIsRejected) {
  PartialRepresentation p;
  p.set(0, arc("0", "1/4"));
  p.set(2, arc("1/8", "3/8"));
  EXPECT_FALSE(solve_nphca(path(3), p).ok());
}

TEST(SolveNphca, RandomRoundTrip) {
  Rng rng(7);
  int touching = 0;
  for (int it = 0; it < 600; ++it) {
    int n = 2 + static_cast<int>(rng() % 14);
    Representation r = random_nphca(n, rng);
    Instance inst = erase_random(r, static_cast<int>(rng() % 4), 3, rng);
    Extension ext = solve_nphca(inst.graph, inst.partial);
    ASSERT_TRUE(ext.ok()) << "iteration " << it << ": " << ext.reason;
    Report rep = check(inst.graph, *ext.representation, inst.partial, RepClass::NPHCA);
    ASSERT_TRUE(rep.ok()) << rep.to_text();
    std::set<Rational> heads;
    for (const auto& [v, a] : inst.partial) heads.insert(a.head.pos());
    for (const auto& [v, a] : inst.partial) touching += heads.count(a.tail.pos()) ? 1 : 0;
  }
  EXPECT_GT(touching, 20);
}

TEST(SolveNphca, RelaxingNeverHurts) {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = 3 + static_cast<int>(rng() % 8);
    Representation r = random_nphca(n, rng);
    Representation other = random_nphca(n, rng);
    // Predrawn arcs from an unrelated drawing: often infeasible, sometimes not.
    Instance inst = erase_random(r, 1, 2, rng);
    PartialRepresentation mixed;
    for (const auto& [v, a] : inst.partial) mixed.set(v, rng() % 2 ? a : other[v]);
    Extension ext = solve_nphca(inst.graph, mixed);
    if (ext.ok()) EXPECT_TRUE(check(inst.graph, *ext.representation, mixed, RepClass::NPHCA).ok());
    EXPECT_TRUE(solve_nphca(inst.graph, {}).ok());
  }
}

TEST(SolveNphca, SparseScaleRoundTrip) {
  Rng rng(3);
  Representation r = sparse_nphca(3000, 6, rng);
  Instance inst = erase_random(r, 1, 10, rng);
  Extension ext = solve_nphca(inst.graph, inst.partial);
  ASSERT_TRUE(ext.ok()) << ext.reason;
}

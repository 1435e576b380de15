#include <gtest/gtest.h>

#include <random>

#include "arcx/cliques.hpp"
#include "arcx/core.hpp"
#include "arcx/errors.hpp"
#include "arcx/verify.hpp"

using namespace arcx;

namespace {

Rational q(const char* s) { return parse_rational(s); }
Arc arc(const char* t, const char* h) { return Arc(q(t), q(h)); }

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Arc random_arc(std::mt19937& rng, int den) {
  return Arc(ratio(static_cast<long>(rng() % den), den), ratio(static_cast<long>(rng() % den), den));
}

}  // namespace

TEST(Rational, ParseAndWrap) {
  EXPECT_EQ(q("2/4"), Rational(1, 2));
  EXPECT_EQ(q("-3/6"), Rational(-1, 2));
  EXPECT_EQ(q("7"), Rational(7));
  EXPECT_THROW(q("1/0"), std::invalid_argument);
  EXPECT_THROW(q("a/2"), std::invalid_argument);
  EXPECT_THROW(q(""), std::invalid_argument);
  EXPECT_EQ(wrap_unit(Rational(5, 4)), Rational(1, 4));
  EXPECT_EQ(wrap_unit(Rational(-1, 4)), Rational(3, 4));
  EXPECT_EQ(CirclePoint(Rational(1)).pos(), 0);
}

TEST(Arc, Contains) {
  EXPECT_TRUE(arc_contains(arc("0", "1/2"), CirclePoint(q("1/4"))));
  EXPECT_TRUE(arc_contains(arc("3/4", "1/4"), CirclePoint(q("0"))));
  EXPECT_TRUE(arc_contains(arc("1/4", "1/4"), CirclePoint(q("1/4"))));
  EXPECT_FALSE(arc_contains(arc("1/4", "1/4"), CirclePoint(q("1/3"))));
}

TEST(Arc, Intersect) {
  EXPECT_TRUE(arcs_intersect(arc("0", "1/4"), arc("1/4", "1/2")));
  EXPECT_FALSE(arcs_intersect(arc("0", "1/4"), arc("3/8", "1/2")));
  EXPECT_TRUE(arcs_intersect(arc("0", "5/8"), arc("1/2", "1/8")));
}

TEST(Arc, IntersectionConnected) {
  EXPECT_FALSE(intersection_connected(arc("0", "5/8"), arc("1/2", "1/8")));
  EXPECT_TRUE(intersection_connected(arc("0", "1/2"), arc("1/4", "3/4")));
  EXPECT_TRUE(intersection_connected(arc("0", "1/2"), arc("1/8", "3/8")));
  EXPECT_THROW(intersection_connected(arc("0", "1/8"), arc("1/4", "1/2")), std::domain_error);
  // Touching at both ends: two single-point components, total length exactly 1.
  EXPECT_FALSE(intersection_connected(arc("0", "1/2"), arc("1/2", "0")));
}

TEST(Arc, Length) {
  EXPECT_EQ(arc_length(arc("1/4", "3/4")), Rational(1, 2));
  EXPECT_EQ(arc_length(arc("3/4", "1/4")), Rational(1, 2));
  EXPECT_EQ(arc_length(arc("1/3", "1/3")), 0);
}

TEST(ArcProperties, RandomPairs) {
  std::mt19937 rng(99);
  for (int i = 0; i < 5000; ++i) {
    Arc a = random_arc(rng, 12), b = random_arc(rng, 12);
    EXPECT_EQ(arcs_intersect(a, b), arcs_intersect(b, a));
    EXPECT_TRUE(arc_contains(a, a.tail));
    EXPECT_TRUE(arc_contains(a, a.head));
    if (arcs_intersect(a, b) && !intersection_connected(a, b)) {
      EXPECT_FALSE(arc_subset(a, b));
      EXPECT_FALSE(arc_subset(b, a));
      EXPECT_GE(arc_length(a) + arc_length(b), 1);
    }
    // Brute-force containment over a grid finer than the endpoints.
    bool brute_subset = true;
    for (int k = 0; k < 48; ++k) {
      CirclePoint p(ratio(k, 48));
      if (arc_contains(a, p) && !arc_contains(b, p)) brute_subset = false;
    }
    EXPECT_EQ(arc_subset(a, b), brute_subset);
  }
}

TEST(CyclicOrder, Canonical) {
  CyclicOrder c({3, 1, 2});
  EXPECT_EQ(c.sequence(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(c.cut_at(2), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(c.reversed().sequence(), (std::vector<int>{1, 3, 2}));
  EXPECT_TRUE(cyclically_consecutive({1, 2, 3, 4}, {4, 1}));
  EXPECT_FALSE(cyclically_consecutive({1, 2, 3, 4}, {1, 3}));
}

TEST(Graph, Basics) {
  Graph g = cycle(4);
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.is_connected());
  EXPECT_FALSE(Graph(2).is_connected());
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  Graph h = g.induced({0, 1, 2});
  EXPECT_EQ(h.edge_count(), 2u);
}

TEST(Cliques, Examples) {
  EXPECT_EQ(enumerate_maximal_cliques(cycle(4)).clique_count(), 4);
  EXPECT_EQ(enumerate_maximal_cliques(complete(4)).clique_count(), 1);
  // Octahedron: complement of a perfect matching on 6 vertices has 8 triangles.
  Graph oct = complete(6);
  Graph oct2(6);
  for (auto [u, v] : oct.edges())
    if (!(u / 2 == v / 2)) oct2.add_edge(u, v);
  auto all = maximal_cliques(oct2, 100);
  ASSERT_TRUE(all);
  EXPECT_EQ(all->size(), 8u);
  try {
    enumerate_maximal_cliques(oct2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHellyCandidate);
  }
}

TEST(Cliques, UniversalPairs) {
  // W4: hub 4 with rim 0..3.
  Graph w4 = cycle(4);
  Graph w(5);
  for (auto [u, v] : w4.edges()) w.add_edge(u, v);
  for (int i = 0; i < 4; ++i) w.add_edge(4, i);
  auto pairs = universal_pairs(w);
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), std::make_pair(0, 4)), pairs.end());
  // C5: for edge 0-1, vertex 3 sees neither end, so no edge qualifies.
  EXPECT_EQ(universal_pairs(cycle(5)).size(), 0u);
  // C4: for edge 0-1, N[0] and N[1] cover 3 and 2.
  EXPECT_EQ(universal_pairs(cycle(4)).size(), 4u);
  // P4 ends are not adjacent, and the middle edge is the only pair.
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(universal_pairs(p4), (std::vector<std::pair<VertexId, VertexId>>{{1, 2}}));
}

TEST(Cliques, GavrilCheck) {
  auto cs = enumerate_maximal_cliques(cycle(4));
  // Cliques sorted lexicographically: {0,1},{0,3},{1,2},{2,3}; cycle order is 0,2,3,1.
  EXPECT_TRUE(gavril_check(cs, {0, 2, 3, 1}));
  EXPECT_FALSE(gavril_check(cs, {0, 3, 2, 1}));
  EXPECT_TRUE(gavril_check(enumerate_maximal_cliques(complete(3)), {0}));
}

TEST(Cliques, MembershipNonEmptyAndEdgesCovered) {
  std::mt19937 rng(5);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    auto all = maximal_cliques(g, 1000);
    ASSERT_TRUE(all);
    // Brute-force maximal cliques over all subsets.
    std::vector<std::vector<VertexId>> brute;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<VertexId> s;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
      bool clique = true;
      for (std::size_t i = 0; i < s.size() && clique; ++i)
        for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = g.adjacent(s[i], s[j]);
      if (!clique) continue;
      bool maximal = true;
      for (int w = 0; w < n && maximal; ++w) {
        if (mask >> w & 1) continue;
        bool ext = true;
        for (VertexId v : s) ext = ext && g.adjacent(v, w);
        if (ext) maximal = false;
      }
      if (maximal) brute.push_back(s);
    }
    auto got = *all;
    std::sort(got.begin(), got.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(got, brute);
  }
}

TEST(Verify, Realizes) {
  EXPECT_TRUE(realizes(complete(2), Representation({arc("0", "1/2"), arc("1/4", "3/4")})));
  EXPECT_FALSE(realizes(Graph(2), Representation({arc("0", "1/2"), arc("1/4", "3/4")})));
  Representation c4({arc("0", "3/8"), arc("1/4", "5/8"), arc("1/2", "7/8"), arc("3/4", "1/8")});
  EXPECT_TRUE(realizes(cycle(4), c4));
  EXPECT_TRUE(is_helly(c4));
  EXPECT_TRUE(is_proper(c4));
  EXPECT_TRUE(is_normal(c4));
}

TEST(Verify, Extends) {
  Representation r({arc("0", "1/2"), arc("1/4", "3/4")});
  EXPECT_TRUE(extends(r, r.restrict_to({0, 1})));
  PartialRepresentation shifted;
  shifted.set(0, arc("1/8", "1/2"));
  EXPECT_FALSE(extends(r, shifted));
  EXPECT_TRUE(extends(r, PartialRepresentation{}));
}

TEST(Verify, ClassPredicates) {
  EXPECT_FALSE(is_proper(Representation({arc("0", "1/2"), arc("1/8", "3/8")})));
  EXPECT_TRUE(is_proper(Representation({arc("0", "1/2"), arc("0", "1/2")})));
  EXPECT_FALSE(is_normal(Representation({arc("0", "5/8"), arc("1/2", "1/8")})));
  EXPECT_TRUE(is_unit(Representation({arc("0", "1/2"), arc("1/4", "3/4")})));
  EXPECT_FALSE(is_unit(Representation({arc("0", "0"), arc("1/4", "1/4")})));
  EXPECT_FALSE(is_helly(Representation({arc("0", "2/5"), arc("7/20", "3/4"), arc("7/10", "1/20")})));
  EXPECT_TRUE(is_helly(Representation({arc("0", "2/5"), arc("7/20", "3/4")})));
}

TEST(Verify, HellyAgreesWithSubsetEnumeration) {
  std::mt19937 rng(17);
  for (int it = 0; it < 400; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back(random_arc(rng, 10));
    Representation r(arcs);
    bool brute = true;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
      bool pairwise = true;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) pairwise = pairwise && arcs_intersect(arcs[s[i]], arcs[s[j]]);
      if (!pairwise) continue;
      bool common = false;
      for (int k = 0; k < 20 && !common; ++k) {
        CirclePoint p(ratio(k, 20));
        bool all = true;
        for (int v : s) all = all && arc_contains(arcs[v], p);
        common = all;
      }
      if (!common) brute = false;
    }
    EXPECT_EQ(is_helly(r), brute);
  }
}

TEST(Verify, RotationInvariance) {
  std::mt19937 rng(23);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Arc> arcs, rotated;
    Rational shift(static_cast<long>(rng() % 37), 37);
    for (int i = 0; i < n; ++i) {
      Arc a = random_arc(rng, 9);
      arcs.push_back(a);
      rotated.emplace_back(a.tail.pos() + shift, a.head.pos() + shift);
    }
    Representation r(arcs), s(rotated);
    EXPECT_EQ(is_normal(r) && is_proper(r), is_normal(s) && is_proper(s));
    EXPECT_EQ(intersection_graph(r), intersection_graph(s));
  }
}

TEST(Verify, IntersectionGraphMatchesPairwise) {
  std::mt19937 rng(31);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng() % 9);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back(random_arc(rng, 8));
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (arcs_intersect(arcs[u], arcs[v])) g.add_edge(u, v);
    EXPECT_EQ(intersection_graph(Representation(arcs)), g);
  }
}

TEST(Verify, ProperAndNormalMatchPairwise) {
  std::mt19937 rng(37);
  for (int it = 0; it < 400; ++it) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back(random_arc(rng, 6));
    bool proper = true, normal = true;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const Arc &a = arcs[static_cast<std::size_t>(u)], &b = arcs[static_cast<std::size_t>(v)];
        if (!arcs_intersect(a, b)) continue;
        if (!(a == b) && (arc_subset(a, b) || arc_subset(b, a))) proper = false;
        if (!intersection_connected(a, b)) normal = false;
      }
    Representation r(arcs);
    EXPECT_EQ(is_proper(r), proper) << "iteration " << it;
    EXPECT_EQ(is_normal(r), normal) << "iteration " << it;
  }
}

TEST(Verify, EndpointsCloserThanMachineWords) {
  mpz_class big = mpz_class(1) << 80;
  Rational tiny(mpz_class(1), big);
  tiny.canonicalize();
  Rational half = q("1/2");
  // Tails 1/2 and 1/2 + 2^-80 share a 62-bit prefix but must still be ordered.
  Representation r({Arc(q("1/4"), half), Arc(half + tiny, q("3/4"))});
  EXPECT_EQ(intersection_graph(r), Graph(2));
  Representation s({Arc(q("1/4"), half + tiny), Arc(half, q("3/4"))});
  EXPECT_EQ(intersection_graph(s), complete(2));
  EXPECT_TRUE(is_proper(s));
  Representation t({Arc(q("1/4"), half + tiny), Arc(half, half + tiny)});
  EXPECT_FALSE(is_proper(t));
}

TEST(Verify, Report) {
  Representation r({arc("0", "1/2"), arc("1/8", "3/8")});
  Graph k2 = complete(2);
  EXPECT_TRUE(check(k2, r, {}, RepClass::CA).ok());
  auto rep = check(k2, r, {}, RepClass::PCA);
  EXPECT_TRUE(rep.failed("proper"));
  EXPECT_FALSE(check(complete(3), r, {}, RepClass::CA).ok());
  EXPECT_EQ(parse_rep_class("nhca"), RepClass::NHCA);
  EXPECT_FALSE(parse_rep_class("xyz").has_value());
}

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "arcx/errors.hpp"
#include "arcx/generate.hpp"
#include "arcx/nphca.hpp"
#include "arcx/oracle.hpp"
#include "util.hpp"

using namespace arcx;
using namespace arcx::test;

namespace {

const OracleBounds kWide{5, 12};

PartialRepresentation keep_some(const Representation& r, Rng& rng, int max_free) {
  const int n = r.size();
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  int free = std::min(n, static_cast<int>(rng() % static_cast<unsigned>(max_free + 1)));
  std::vector<VertexId> kept(order.begin() + free, order.end());
  return r.restrict_to(kept);
}

}  // namespace

TEST(Oracle, EdgeWithOnePredrawn) {
  PartialRepresentation p;
  p.set(0, arc("0", "1/4"));
  Extension e = oracle_extend(complete(2), p, RepClass::CA);
  ASSERT_TRUE(e.ok());
  EXPECT_TRUE(check(complete(2), *e.representation, p, RepClass::CA).ok());
}

TEST(Oracle, WheelIsHellyButNotNormalHelly) {
  EXPECT_FALSE(oracle_extend(wheel(4), {}, RepClass::NHCA, kWide).ok());
  EXPECT_TRUE(oracle_extend(wheel(4), {}, RepClass::HCA, kWide).ok());
}

TEST(Oracle, Bounds) {
  EXPECT_THROW(oracle_extend(cycle(5), {}, RepClass::CA), Error);
  PartialRepresentation p;
  for (int v = 0; v < 7; ++v) p.set(v, Arc(ratio(v, 7), ratio(v, 7) + ratio(1, 14)));
  Graph g(8);
  try {
    oracle_extend(g, p, RepClass::CA);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundsExceeded);
  }
  EXPECT_THROW(oracle_extend(complete(2), {}, RepClass::UCA), Error);
}

TEST(Oracle, TouchingNeedsCoincidence) {
  // Path a-b-c with a and c predrawn touching b's would-be span only at single points.
  PartialRepresentation p;
  p.set(0, arc("0", "1/4"));
  p.set(2, arc("1/2", "3/4"));
  EXPECT_TRUE(oracle_extend(path(3), p, RepClass::NPHCA).ok());
  p.set(2, arc("1/4", "1/2"));
  // a and c touch at 1/4, so they would be adjacent.
  EXPECT_FALSE(oracle_extend(path(3), p, RepClass::CA).ok());
}

TEST(Oracle, KnownExtensionsAreFound) {
  Rng rng(21);
  for (int it = 0; it < 80; ++it) {
    RepClass cls = std::array{RepClass::NPHCA, RepClass::NHCA, RepClass::HCA}[it % 3];
    Representation r = random_of_class(cls, 3 + static_cast<int>(rng() % 4), rng);
    Graph g = intersection_graph(r);
    PartialRepresentation p = keep_some(r, rng, 3);
    EXPECT_TRUE(oracle_extend(g, p, cls).ok()) << "iteration " << it;
  }
}

TEST(Oracle, MonotoneOverClasses) {
  Rng rng(5);
  const std::vector<std::pair<RepClass, RepClass>> inclusions{
      {RepClass::NPHCA, RepClass::PHCA}, {RepClass::NPHCA, RepClass::NHCA}, {RepClass::NHCA, RepClass::HCA},
      {RepClass::HCA, RepClass::CA},     {RepClass::PHCA, RepClass::PCA},   {RepClass::NHCA, RepClass::NCA}};
  for (int it = 0; it < 40; ++it) {
    Representation r = random_hca_distinct(4, rng);
    Representation other = random_hca_distinct(4, rng);
    Graph g = intersection_graph(r);
    PartialRepresentation p = keep_some(r, rng, 2);
    PartialRepresentation mixed;
    for (const auto& [v, a] : p) mixed.set(v, rng() % 2 ? a : other[v]);
    for (auto [small, big] : inclusions)
      if (oracle_extend(g, mixed, small).ok()) EXPECT_TRUE(oracle_extend(g, mixed, big).ok());
  }
}

TEST(Oracle, AgreesWithNphcaSolver) {
  Rng rng(99);
  int yes = 0, no = 0;
  for (int it = 0; it < 300; ++it) {
    int n = 3 + static_cast<int>(rng() % 5);
    Representation r = random_nphca(n, rng);
    Representation other = random_nphca(n, rng);
    Graph g = intersection_graph(r);
    PartialRepresentation p = keep_some(r, rng, 4);
    PartialRepresentation mixed;
    for (const auto& [v, a] : p) mixed.set(v, rng() % 3 ? a : other[v]);
    if (2 * mixed.size() > 12) continue;
    bool expected = oracle_extend(g, mixed, RepClass::NPHCA, {4, 12}).ok();
    Extension got = solve_nphca(g, mixed);
    ASSERT_EQ(got.ok(), expected) << "iteration " << it << ": " << got.reason;
    (expected ? yes : no)++;
  }
  EXPECT_GT(yes, 50);
  EXPECT_GT(no, 50);
}

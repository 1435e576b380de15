#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "arcx/core.hpp"
#include "arcx/regions.hpp"

namespace arcx::test {

inline Rational q(const char* s) { return parse_rational(s); }
inline Arc arc(const char* t, const char* h) { return Arc(q(t), q(h)); }

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Wheel: hub 0 joined to the cycle 1..k.
inline Graph wheel(int k) {
  Graph g(k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(0, i + 1);
    g.add_edge(i + 1, (i + 1) % k + 1);
  }
  return g;
}

template <class T>
bool same_cyclic(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool eq = true;
    for (std::size_t i = 0; i < a.size() && eq; ++i) eq = a[(i + r) % a.size()] == b[i];
    if (eq) return true;
  }
  return false;
}

/// Fails the binary if any region map built during the run broke a region law.
class RegionLawGuard : public ::testing::Environment {
 public:
  void TearDown() override {
    RegionLawStats s = region_law_stats();
    EXPECT_EQ(s.violations, 0u) << "over " << s.maps << " region maps";
  }
};

inline const bool region_law_guard_installed = [] {
  ::testing::AddGlobalTestEnvironment(new RegionLawGuard);
  return true;
}();

}  // namespace arcx::test

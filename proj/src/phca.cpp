#include "arcx/phca.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "arcx/errors.hpp"
#include "arcx/nphca.hpp"
#include "arcx/verify.hpp"

namespace arcx {

CircleSections CircleSections::of(const Arc& u, const Arc& v) {
  return {Arc(v.tail, u.head), Arc(u.tail, v.head), Arc(v.head, v.tail), Arc(u.head, u.tail)};
}

std::vector<std::pair<VertexId, VertexId>> non_normal_pairs(const PartialRepresentation& partial) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (auto it = partial.begin(); it != partial.end(); ++it)
    for (auto jt = std::next(it); jt != partial.end(); ++jt)
      if (arcs_intersect(it->second, jt->second) && !intersection_connected(it->second, jt->second))
        out.emplace_back(it->first, jt->first);
  return out;
}

namespace {

/// Components of G minus its universal vertices.
std::vector<std::vector<VertexId>> non_universal_components(const Graph& g) {
  const int n = g.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (g.is_universal(s) || comp[static_cast<std::size_t>(s)] >= 0) continue;
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (VertexId y : g.neighbors(x))
        if (!g.is_universal(y) && comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = comp[static_cast<std::size_t>(s)];
          stack.push_back(y);
        }
    }
  }
  return out;
}

bool is_clique(const Graph& g, const std::vector<VertexId>& vs) {
  for (VertexId x : vs)
    if (g.degree(x) < static_cast<int>(vs.size()) - 1) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

/// Shortest arc through `points` that avoids the closed section `avoid`, widened by a
/// third of the neighboring gaps between predrawn endpoints.
std::optional<Arc> hull_avoiding(const std::vector<CirclePoint>& points, const Arc& avoid,
                                 const std::set<Rational>& anchors) {
  const CirclePoint& origin = avoid.head;
  Rational span = cw_distance(origin, avoid.tail);
  auto offset = [&](const Rational& x) { return cw_distance(origin, CirclePoint(x)); };
  std::optional<Rational> lo, hi;
  for (const CirclePoint& p : points) {
    Rational x = offset(p.pos());
    if (x <= 0 || x >= span) return std::nullopt;
    if (!lo || x < *lo) lo = x;
    if (!hi || x > *hi) hi = x;
  }
  if (!lo) return std::nullopt;
  Rational before = 0, after = span;
  for (const Rational& a : anchors) {
    Rational x = offset(a);
    if (x >= span) continue;
    if (x < *lo && x > before) before = x;
    if (x > *hi && x < after) after = x;
  }
  Rational tail = *lo - (*lo - before) / 3;
  Rational head = *hi + (after - *hi) / 3;
  return Arc(CirclePoint(origin.pos() + tail), CirclePoint(origin.pos() + head));
}

}  // namespace

Extension solve_phca(const Graph& g, const PartialRepresentation& partial) {
  const int n = g.size();
  for (const auto& [v, a] : partial)
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidInput, "predrawn vertex out of range");
  if (n == 0) return Extension::yes(Representation{});
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  Report valid = check_partial(g, partial, RepClass::PHCA);
  if (!valid.ok()) return Extension::no("predrawn arcs are not a valid PHCA representation: " + valid.to_text());

  auto crossing = non_normal_pairs(partial);
  if (crossing.empty()) return solve_nphca(g, partial);

  auto finish = [&](std::vector<Arc> arcs) {
    Representation r(std::move(arcs));
    if (check(g, r, partial, RepClass::PHCA).ok()) return Extension::yes(std::move(r));
    return Extension::no("constructed representation fails verification");
  };

  const auto [u, v] = crossing.front();
  const Arc& ru = partial.at(u);
  if (g.is_complete()) {
    std::vector<Arc> arcs(static_cast<std::size_t>(n), ru);
    for (const auto& [w, a] : partial) arcs[static_cast<std::size_t>(w)] = a;
    return finish(std::move(arcs));
  }

  for (auto [x, y] : crossing)
    if (!g.is_universal(x) || !g.is_universal(y))
      return Extension::no("arcs in non-normal position must belong to universal vertices");

  auto comps = non_universal_components(g);
  if (comps.size() != 2 || !is_clique(g, comps[0]) || !is_clique(g, comps[1]))
    return Extension::no("removing universal vertices does not leave two disjoint cliques");

  const CircleSections sec = CircleSections::of(ru, partial.at(v));
  // Endpoints of universal arcs that an arc containing A must hold, and those for B.
  std::vector<CirclePoint> side_a, side_b;
  std::set<Rational> anchors;
  for (const auto& [w, a] : partial) {
    anchors.insert(a.tail.pos());
    anchors.insert(a.head.pos());
    if (!g.is_universal(w)) continue;
    bool has_c = arc_subset(sec.c, a), has_d = arc_subset(sec.d, a);
    if (has_c == has_d) return Extension::no("a universal arc must contain exactly one of the sections C and D");
    side_a.push_back(has_c ? a.head : a.tail);
    side_b.push_back(has_c ? a.tail : a.head);
  }

  // side[k] is true when clique k lies on the A side.
  std::array<std::optional<bool>, 2> side;
  std::array<std::optional<Arc>, 2> rep;
  for (int k = 0; k < 2; ++k)
    for (VertexId w : comps[static_cast<std::size_t>(k)])
      if (partial.contains(w)) {
        const Arc& a = partial.at(w);
        bool in_a = arc_subset(sec.a, a), in_b = arc_subset(sec.b, a);
        if (in_a == in_b) return Extension::no("a non-universal predrawn arc must contain exactly one of A and B");
        if (side[static_cast<std::size_t>(k)] && *side[static_cast<std::size_t>(k)] != in_a)
          return Extension::no("a clique has predrawn arcs on both sides");
        side[static_cast<std::size_t>(k)] = in_a;
        if (!rep[static_cast<std::size_t>(k)]) rep[static_cast<std::size_t>(k)] = a;
      }
  if (!side[0] && !side[1]) side[0] = true;
  if (!side[0]) side[0] = !*side[1];
  if (!side[1]) side[1] = !*side[0];
  if (*side[0] == *side[1]) return Extension::no("both cliques lie on the same side");

  for (int k = 0; k < 2; ++k) {
    if (rep[static_cast<std::size_t>(k)]) continue;
    bool on_a = *side[static_cast<std::size_t>(k)];
    auto hull = hull_avoiding(on_a ? side_a : side_b, on_a ? sec.b : sec.a, anchors);
    if (!hull) return Extension::no("endpoints of universal arcs are not split into two consecutive sets");
    rep[static_cast<std::size_t>(k)] = *hull;
  }

  std::vector<int> clique_of(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < 2; ++k)
    for (VertexId w : comps[static_cast<std::size_t>(k)]) clique_of[static_cast<std::size_t>(w)] = k;
  std::vector<Arc> arcs(static_cast<std::size_t>(n));
  for (VertexId w = 0; w < n; ++w) {
    if (partial.contains(w)) arcs[static_cast<std::size_t>(w)] = partial.at(w);
    else if (clique_of[static_cast<std::size_t>(w)] < 0) arcs[static_cast<std::size_t>(w)] = ru;
    else arcs[static_cast<std::size_t>(w)] = *rep[static_cast<std::size_t>(clique_of[static_cast<std::size_t>(w)])];
  }
  return finish(std::move(arcs));
}

}  // namespace arcx

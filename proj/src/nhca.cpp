#include "arcx/nhca.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arcx/errors.hpp"
#include "arcx/pctree.hpp"
#include "arcx/verify.hpp"

namespace arcx {

std::vector<CirclePoint> greedy_place(const LinearOrder& order, const RegionMap& rm, const Rational& eps,
                                      const CirclePoint& anchor, bool anchor_first) {
  std::vector<CirclePoint> points(rm.class_of.size());
  std::map<int, std::vector<LinearSpan>> spans;
  Rational prev(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    CliqueId c = order[i];
    if (i == 0 && anchor_first) {
      points[static_cast<std::size_t>(c)] = anchor;
      continue;
    }
    int cls = rm.class_of[static_cast<std::size_t>(c)];
    auto it = spans.find(cls);
    if (it == spans.end()) it = spans.emplace(cls, rm.linearized(cls, anchor)).first;
    const Rational bound = prev + eps;
    std::optional<Rational> at;
    for (const LinearSpan& s : it->second) {
      if (s.hi <= bound) continue;
      if (s.lo > bound && s.lo_closed) {
        at = s.lo;
      } else {
        Rational lower = s.lo > bound ? s.lo : bound;
        Rational x = lower + eps;
        at = (x < s.hi || (x == s.hi && s.hi_closed)) ? x : Rational((lower + s.hi) / 2);
      }
      break;
    }
    if (!at) throw Error(ErrorKind::PlacementFailed, "no room for the clique point of clique " + std::to_string(c));
    prev = *at;
    points[static_cast<std::size_t>(c)] = CirclePoint(anchor.pos() + *at);
  }
  return points;
}

Representation draw_new_arcs(const std::vector<CirclePoint>& points, const LinearOrder& order,
                             const CliqueStructure& cs, const PartialRepresentation& partial) {
  const int n = static_cast<int>(cs.membership.size());
  const int k = static_cast<int>(order.size());
  std::vector<int> rank(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<Arc> arcs(static_cast<std::size_t>(n));
  std::vector<char> in(static_cast<std::size_t>(k), 0);
  for (VertexId v = 0; v < n; ++v) {
    if (partial.contains(v)) {
      arcs[static_cast<std::size_t>(v)] = partial.at(v);
      continue;
    }
    const auto& mv = cs.membership[static_cast<std::size_t>(v)];
    int first = 0, last = k - 1;
    if (static_cast<int>(mv.size()) < k) {
      for (CliqueId c : mv) in[static_cast<std::size_t>(rank[static_cast<std::size_t>(c)])] = 1;
      for (CliqueId c : mv) {
        int r = rank[static_cast<std::size_t>(c)];
        if (!in[static_cast<std::size_t>((r + k - 1) % k)]) first = r;
        if (!in[static_cast<std::size_t>((r + 1) % k)]) last = r;
      }
      for (CliqueId c : mv) in[static_cast<std::size_t>(rank[static_cast<std::size_t>(c)])] = 0;
    }
    arcs[static_cast<std::size_t>(v)] = Arc(points[static_cast<std::size_t>(order[static_cast<std::size_t>(first)])],
                                            points[static_cast<std::size_t>(order[static_cast<std::size_t>(last)])]);
  }
  return Representation(std::move(arcs));
}

Representation separate_new_endpoints(const Representation& r, const PartialRepresentation& partial,
                                      const std::vector<CirclePoint>& keep_clear) {
  std::set<Rational> marks;
  for (const Arc& a : r.arcs()) {
    marks.insert(a.tail.pos());
    marks.insert(a.head.pos());
  }
  for (const CirclePoint& p : keep_clear) marks.insert(p.pos());
  Rational gap(1);
  for (auto it = marks.begin(); it != marks.end(); ++it) {
    auto next = std::next(it);
    Rational d = next == marks.end() ? Rational(*marks.begin() + 1 - *it) : Rational(*next - *it);
    if (d > 0 && d < gap) gap = d;
  }
  const Rational step = gap / (2 * (r.size() + 1));

  Representation out = r;
  std::map<Rational, int> tails, heads;
  for (VertexId v = 0; v < r.size(); ++v) {
    if (partial.contains(v)) continue;
    Arc& a = out[v];
    int t = ++tails[a.tail.pos()];
    int h = ++heads[a.head.pos()];
    a = Arc(CirclePoint(a.tail.pos() - step * t), CirclePoint(a.head.pos() + step * h));
  }
  return out;
}

std::optional<Representation> realize_order(const Graph& g, const PartialRepresentation& partial,
                                            const CliqueStructure& cs, const RegionMap& rm, const LinearOrder& order,
                                            const CirclePoint& anchor, bool anchor_first, RepClass cls) {
  Rational eps = placement_epsilon(rm, g.size());
  std::vector<CirclePoint> points = greedy_place(order, rm, eps, anchor, anchor_first);
  Representation r = draw_new_arcs(points, order, cs, partial);
  r = separate_new_endpoints(r, partial, {anchor});
  if (!check(g, r, partial, cls).ok()) return std::nullopt;
  return r;
}

namespace {

using Constraints = std::vector<std::vector<int>>;

void add_membership(const CliqueStructure& cs, std::set<std::vector<int>>& out) {
  for (const auto& m : cs.membership) out.insert(m);
}

Constraints finish(std::set<std::vector<int>> sets, std::size_t leaves) {
  Constraints out;
  for (const auto& s : sets)
    if (s.size() >= 2 && s.size() < leaves) out.push_back(s);
  return out;
}

/// Two cliques can only share a region that has room for two points.
bool crowded_point_region(const RegionMap& rm) {
  for (const auto& cls : rm.classes)
    if (cls.cliques.size() >= 2 && cls.islands.size() == 1 && cls.islands.front().single_point()) return true;
  return false;
}

std::optional<CliqueStructure> cliques_of(const Graph& g) {
  try {
    return enumerate_maximal_cliques(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotHellyCandidate) throw;
    return std::nullopt;
  }
}

std::optional<Extension> screen(const Graph& g, const PartialRepresentation& partial) {
  for (const auto& [v, a] : partial)
    if (v < 0 || v >= g.size()) throw Error(ErrorKind::InvalidInput, "predrawn vertex out of range");
  if (g.size() == 0) return Extension::yes(Representation{});
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  Report valid = check_partial(g, partial, RepClass::NHCA);
  if (!valid.ok()) return Extension::no("predrawn arcs are not a valid NHCA representation: " + valid.to_text());
  return std::nullopt;
}

}  // namespace

namespace {

struct Setup {
  CliqueStructure cs;
  RegionMap rm;
};

/// Cliques and regions, or the reason there is no extension.
std::optional<Extension> set_up(const Graph& g, const PartialRepresentation& partial, Setup& out) {
  if (auto early = screen(g, partial)) return early;
  auto cs = cliques_of(g);
  if (!cs) return Extension::no("more maximal cliques than vertices, so no Helly representation");
  auto rm = compute_regions(*cs, partial);
  if (!rm) return Extension::no("a maximal clique has an empty region");
  if (crowded_point_region(*rm)) return Extension::no("two maximal cliques share a region that is a single point");
  out = {std::move(*cs), std::move(*rm)};
  return std::nullopt;
}

/// Cliques laid out on the line obtained by cutting the circle at an uncovered point.
Extension line_layout(const Graph& g, const PartialRepresentation& partial, const Setup& s, const CirclePoint& cut) {
  const int k = s.cs.clique_count();
  const int total = s.rm.piece_count();
  const int piece = s.rm.piece_at(cut);
  std::vector<int> ground(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) ground[static_cast<std::size_t>(i)] = i;
  const int sentinel = k;

  std::set<std::vector<int>> sets;
  add_membership(s.cs, sets);
  for (const GapSet& gap : gap_sets(s.rm)) {
    std::vector<int> with_cut = gap.cliques;
    if (gap.contains_piece(piece, total)) with_cut.push_back(sentinel);
    sets.insert(with_cut);
  }
  auto tree = PCTree::build(ground, finish(std::move(sets), ground.size()));
  if (!tree) return Extension::no("the clique consecutivity constraints admit no order on the line");
  auto order = tree->reorder(sentinel, linear_prec(s.rm, cut));
  if (!order) return Extension::no("no clique order on the line agrees with the positions of the regions");
  if (auto r = realize_order(g, partial, s.cs, s.rm, *order, cut, false, RepClass::NHCA)) return Extension::yes(std::move(*r));
  return Extension::no("constructed representation fails verification");
}

}  // namespace

Extension solve_with_universal_at(const Graph& g, const PartialRepresentation& partial, const CirclePoint& cut) {
  Setup s;
  if (auto early = set_up(g, partial, s)) return *early;
  if (s.rm.cover_size[static_cast<std::size_t>(s.rm.piece_at(cut))] != 0)
    throw Error(ErrorKind::InvalidInput, "cut point lies on a predrawn arc");
  return line_layout(g, partial, s, cut);
}

Extension solve_with_universal(const Graph& g, const PartialRepresentation& partial) {
  Setup s;
  if (auto early = set_up(g, partial, s)) return *early;
  Extension last = Extension::no("predrawn arcs cover the circle, but a universal vertex needs an uncovered point");
  for (int piece = 0; piece < s.rm.piece_count(); ++piece) {
    if (s.rm.cover_size[static_cast<std::size_t>(piece)] != 0) continue;
    last = line_layout(g, partial, s, s.rm.run_span(piece, piece).middle());
    if (last.ok()) return last;
  }
  return last;
}

Extension solve_nhca(const Graph& g, const PartialRepresentation& partial) {
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.is_universal(v)) return solve_with_universal(g, partial);
  Setup s;
  if (auto early = set_up(g, partial, s)) return *early;
  const CliqueStructure* cs = &s.cs;
  const RegionMap* rm = &s.rm;
  auto d = single_island_clique(*rm);
  if (!d) return Extension::no("no maximal clique has a connected region");
  const CirclePoint p_d = rm->region_of(*d).islands.front().middle();

  const int k = cs->clique_count();
  std::vector<int> ground(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) ground[static_cast<std::size_t>(i)] = i;
  std::set<std::vector<int>> sets;
  add_membership(*cs, sets);
  for (auto [u, w] : cs->universal_pairs) {
    std::vector<int> both;
    const auto& mu = cs->membership[static_cast<std::size_t>(u)];
    const auto& mw = cs->membership[static_cast<std::size_t>(w)];
    std::set_intersection(mu.begin(), mu.end(), mw.begin(), mw.end(), std::back_inserter(both));
    sets.insert(both);
  }
  for (const GapSet& gap : gap_sets(*rm)) sets.insert(gap.cliques);
  auto tree = PCTree::build(ground, finish(std::move(sets), ground.size()));
  if (!tree) return Extension::no("the clique consecutivity constraints admit no cyclic order");
  PartialPrec prec;
  for (auto [a, b] : build_prec(*rm, *d, p_d))
    if (a != *d) prec.emplace_back(a, b);
  auto rest = tree->reorder(*d, prec);
  if (!rest) return Extension::no("no clique order agrees with the positions of the regions");
  LinearOrder order{*d};
  order.insert(order.end(), rest->begin(), rest->end());
  if (auto r = realize_order(g, partial, *cs, *rm, order, p_d, true, RepClass::NHCA)) return Extension::yes(std::move(*r));
  return Extension::no("constructed representation fails verification");
}

}  // namespace arcx

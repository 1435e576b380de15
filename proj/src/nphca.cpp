#include "arcx/nphca.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>

#include "arcx/errors.hpp"
#include "arcx/verify.hpp"

namespace arcx {
namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// N[u] == N[v], without building either set.
bool closed_twins(const Graph& g, VertexId u, VertexId v) {
  if (u == v) return true;
  if (g.degree(u) != g.degree(v) || !g.adjacent(u, v)) return false;
  const auto &nu = g.neighbors(u), &nv = g.neighbors(v);
  auto i = nu.begin(), j = nv.begin();
  while (true) {
    if (i != nu.end() && *i == v) ++i;
    if (j != nv.end() && *j == u) ++j;
    if (i == nu.end() || j == nv.end()) return i == nu.end() && j == nv.end();
    if (*i++ != *j++) return false;
  }
}

/// For each vertex, the number of neighbors reached going forward and backward in the
/// cyclic order. Universal vertices get fwd = n-1.
struct Extents {
  std::vector<int> pos;
  std::vector<int> fwd;
  std::vector<int> bwd;
  std::vector<char> universal;
};

Extents compute_extents(const Graph& g, const std::vector<VertexId>& ord) {
  const int n = g.size();
  Extents e;
  e.pos.assign(static_cast<std::size_t>(n), 0);
  e.fwd.assign(static_cast<std::size_t>(n), 0);
  e.bwd.assign(static_cast<std::size_t>(n), 0);
  e.universal.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) e.pos[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] = i;
  std::vector<int> offsets;
  for (VertexId v = 0; v < n; ++v) {
    auto sv = static_cast<std::size_t>(v);
    if (g.is_universal(v)) {
      e.universal[sv] = 1;
      e.fwd[sv] = n - 1;
      e.bwd[sv] = n - 1;
      continue;
    }
    offsets.clear();
    for (VertexId w : g.neighbors(v)) offsets.push_back((e.pos[static_cast<std::size_t>(w)] - e.pos[sv] + n) % n);
    std::sort(offsets.begin(), offsets.end());
    int f = 0;
    while (f < static_cast<int>(offsets.size()) && offsets[static_cast<std::size_t>(f)] == f + 1) ++f;
    e.fwd[sv] = f;
    e.bwd[sv] = static_cast<int>(offsets.size()) - f;
  }
  return e;
}

constexpr std::size_t kOrderSearchLimit = 20000;

/// Predrawn vertices by tail position, ties by id.
std::vector<VertexId> by_tail(const PartialRepresentation& p) {
  std::vector<VertexId> vs;
  std::vector<const Rational*> values;
  for (const auto& [v, a] : p) {
    vs.push_back(v);
    values.push_back(&a.tail.pos());
  }
  std::vector<int> rank = rank_positions(values);
  std::vector<std::size_t> idx(vs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  std::vector<VertexId> out;
  out.reserve(vs.size());
  for (std::size_t i : idx) out.push_back(vs[i]);
  return out;
}

}  // namespace

Representation TwinReduction::expand(const Representation& reduced) const {
  std::vector<int> index(source.size(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  std::vector<Arc> arcs;
  arcs.reserve(source.size());
  for (VertexId src : source) arcs.push_back(reduced[index[static_cast<std::size_t>(src)]]);
  return Representation(std::move(arcs));
}

TwinReduction prune_twins(const Graph& g, const PartialRepresentation& partial) {
  const int n = g.size();
  std::vector<const Arc*> drawn_arc(static_cast<std::size_t>(n), nullptr);
  for (const auto& [v, a] : partial) drawn_arc[static_cast<std::size_t>(v)] = &a;

  // Twins share the order-free hash of their closed neighborhood; equal hashes are then
  // split exactly.
  std::vector<std::pair<std::uint64_t, VertexId>> keyed(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(v));
    for (VertexId w : g.neighbors(v)) h += mix64(static_cast<std::uint64_t>(w));
    keyed[static_cast<std::size_t>(v)] = {h, v};
  }
  std::sort(keyed.begin(), keyed.end());

  TwinReduction tr;
  tr.source.assign(static_cast<std::size_t>(n), -1);
  auto settle = [&](const std::vector<VertexId>& members) {
    std::vector<VertexId> distinct;
    for (VertexId v : members) {
      const Arc* a = drawn_arc[static_cast<std::size_t>(v)];
      if (!a) continue;
      auto same = std::find_if(distinct.begin(), distinct.end(),
                               [&](VertexId w) { return *drawn_arc[static_cast<std::size_t>(w)] == *a; });
      tr.source[static_cast<std::size_t>(v)] = same == distinct.end() ? v : *same;
      if (same == distinct.end()) distinct.push_back(v);
    }
    VertexId rep = distinct.empty() ? members.front() : distinct.front();
    for (VertexId v : members)
      if (!drawn_arc[static_cast<std::size_t>(v)]) tr.source[static_cast<std::size_t>(v)] = rep;
  };
  std::vector<VertexId> rest, members, others;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    rest.clear();
    while (j < keyed.size() && keyed[j].first == keyed[i].first) rest.push_back(keyed[j++].second);
    while (!rest.empty()) {
      members.clear();
      others.clear();
      for (VertexId v : rest) (closed_twins(g, rest.front(), v) ? members : others).push_back(v);
      settle(members);
      rest.swap(others);
    }
    i = j;
  }
  for (VertexId v = 0; v < n; ++v)
    if (tr.source[static_cast<std::size_t>(v)] == v) tr.kept.push_back(v);
  tr.graph = g.induced(tr.kept);
  for (std::size_t i = 0; i < tr.kept.size(); ++i)
    if (const Arc* a = drawn_arc[static_cast<std::size_t>(tr.kept[i])]) tr.partial.set(static_cast<VertexId>(i), *a);
  return tr;
}

std::optional<PCTree> consecutive_ordering_tree(const Graph& g) {
  std::vector<int> ground(static_cast<std::size_t>(g.size()));
  std::vector<std::vector<int>> cons;
  cons.reserve(ground.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    ground[static_cast<std::size_t>(v)] = v;
    cons.push_back(g.closed_neighborhood(v));
  }
  return PCTree::build(ground, cons);
}

TouchingPairs touching_pairs(const PartialRepresentation& partial) {
  std::vector<VertexId> vs;
  std::vector<const Rational*> values;
  for (const auto& [v, a] : partial) {
    vs.push_back(v);
    values.push_back(&a.tail.pos());
    values.push_back(&a.head.pos());
  }
  std::vector<int> rank = rank_positions(values);
  std::vector<std::vector<VertexId>> heads(values.size());
  for (std::size_t i = 0; i < vs.size(); ++i) heads[static_cast<std::size_t>(rank[2 * i + 1])].push_back(vs[i]);
  TouchingPairs out;
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (VertexId i : heads[static_cast<std::size_t>(rank[2 * j])])
      if (i != vs[j]) out.emplace_back(i, vs[j]);
  return out;
}

namespace {

std::vector<int> without(std::vector<int> set, int x) {
  set.erase(std::remove(set.begin(), set.end(), x), set.end());
  return set;
}

std::vector<int> common_neighborhood(const Graph& g, VertexId u, VertexId v) {
  std::vector<int> nu = g.closed_neighborhood(u), nv = g.closed_neighborhood(v), out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<PCTree> tail_ordering_tree(const Graph& g, const TouchingPairs& touching) {
  const int n = g.size();
  std::vector<int> ground(static_cast<std::size_t>(n));
  std::iota(ground.begin(), ground.end(), 0);
  std::vector<std::vector<int>> closed(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
  // Feeding constraints in breadth-first order keeps consecutive reductions in nearby
  // parts of the tree.
  const std::vector<VertexId> order = breadth_first_order(g);
  std::vector<std::vector<int>> cons;
  std::vector<int> common;
  for (VertexId u : order) {
    const auto& nu = closed[static_cast<std::size_t>(u)];
    cons.push_back(nu);
    for (VertexId v : g.neighbors(u)) {
      if (v < u) continue;
      const auto& nv = closed[static_cast<std::size_t>(v)];
      common.clear();
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      if (common.size() < nu.size() && common.size() < nv.size()) cons.push_back(common);
    }
  }
  for (auto [i, j] : touching) {
    if (!g.adjacent(i, j)) return std::nullopt;
    std::vector<int> s = common_neighborhood(g, i, j);
    if (static_cast<int>(s.size()) == n) continue;
    cons.push_back(without(s, i));
    cons.push_back(without(s, j));
    if (!g.is_universal(i)) cons.push_back(without(closed[static_cast<std::size_t>(i)], j));
    if (!g.is_universal(j)) cons.push_back(without(closed[static_cast<std::size_t>(j)], i));
  }
  return PCTree::build(ground, cons);
}

std::optional<std::vector<VertexId>> consecutive_cyclic_ordering(const Graph& g,
                                                                 const std::vector<VertexId>& tail_order,
                                                                 const TouchingPairs& touching) {
  const int n = g.size();
  if (n == 0) return std::vector<VertexId>{};
  auto tree = tail_ordering_tree(g, touching);
  if (!tree) return std::nullopt;
  VertexId anchor = tail_order.empty() ? 0 : tail_order.front();
  PartialPrec prec;
  for (std::size_t i = 1; i + 1 < tail_order.size(); ++i) prec.emplace_back(tail_order[i], tail_order[i + 1]);
  // The block S = N[i] ∩ N[j] runs forward from i to j. Cutting the cyclic order at the
  // anchor, that direction is pinned by one precedence pair.
  for (auto [i, j] : touching) {
    std::vector<int> s = common_neighborhood(g, i, j);
    if (static_cast<int>(s.size()) == n) continue;
    bool anchor_in_s = std::binary_search(s.begin(), s.end(), anchor);
    if (!anchor_in_s || anchor == i) {
      prec.emplace_back(i, j);
    } else if (anchor == j) {
      VertexId outside = 0;
      while (std::binary_search(s.begin(), s.end(), outside)) ++outside;
      prec.emplace_back(outside, i);
    } else {
      prec.emplace_back(j, i);
    }
  }
  std::erase_if(prec, [&](const auto& p) { return p.first == anchor; });
  for (const auto& [a, b] : prec)
    if (b == anchor) return std::nullopt;
  std::optional<LinearOrder> lin;
  try {
    lin = tree->reorder(anchor, prec);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CyclicPrec) throw;
  }
  if (!lin) return std::nullopt;
  std::vector<VertexId> ord{anchor};
  ord.insert(ord.end(), lin->begin(), lin->end());
  return ord;
}

bool check_touching(const Graph& g, const PartialRepresentation& partial, const std::vector<VertexId>& ord) {
  std::vector<EndpointToken> tokens;
  std::vector<const Rational*> values;
  for (const auto& [v, a] : partial) {
    tokens.push_back({v, false});
    values.push_back(&a.tail.pos());
    tokens.push_back({v, true});
    values.push_back(&a.head.pos());
  }
  std::vector<int> rank = rank_positions(values);
  std::vector<std::size_t> by_point(tokens.size());
  std::iota(by_point.begin(), by_point.end(), 0);
  std::stable_sort(by_point.begin(), by_point.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  Extents ext;
  bool have_ext = false;
  const int n = g.size();
  for (std::size_t first = 0, last = 0; first < by_point.size(); first = last) {
    while (last < by_point.size() && rank[by_point[last]] == rank[by_point[first]]) ++last;
    if (last - first == 1) continue;
    if (last - first > 2) return false;
    const EndpointToken& a = tokens[by_point[first]];
    const EndpointToken& b = tokens[by_point[first + 1]];
    if (a.head == b.head || a.vertex == b.vertex) return false;
    VertexId i = a.head ? a.vertex : b.vertex;
    VertexId j = a.head ? b.vertex : a.vertex;
    if (!have_ext) {
      ext = compute_extents(g, ord);
      have_ext = true;
    }
    auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
    bool ok_i = ext.universal[si] || ord[static_cast<std::size_t>((ext.pos[si] + ext.fwd[si]) % n)] == j;
    bool ok_j = ext.universal[sj] || ord[static_cast<std::size_t>((ext.pos[sj] - ext.bwd[sj] + n) % n)] == i;
    if (!ok_i || !ok_j) return false;
  }
  return true;
}

EndpointOrder build_endpoint_order(const Graph& g, const std::vector<VertexId>& ord,
                                   const PartialRepresentation& partial) {
  const int n = g.size();
  Extents ext = compute_extents(g, ord);
  auto at = [&](int p, int d) { return ord[static_cast<std::size_t>(((p + d) % n + n) % n)]; };
  // heads[k] holds (distance back to the tail, vertex) for heads placed before t_{ord[k]}.
  std::vector<std::vector<std::pair<int, VertexId>>> heads(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    auto sv = static_cast<std::size_t>(v);
    int p = ext.pos[sv];
    if (!ext.universal[sv]) {
      int dist = ext.fwd[sv] + 1;
      heads[static_cast<std::size_t>((p + dist) % n)].emplace_back(dist, v);
      continue;
    }
    // h_v goes right before the tail at forward offset e; tails at offsets 1..e-1 lie in R(v).
    int best = -1;
    for (int d = 1; d < n; ++d) {
      VertexId w = at(p, -d);
      if (ext.universal[static_cast<std::size_t>(w)]) continue;
      if (ext.fwd[static_cast<std::size_t>(w)] < d) break;
      best = d;
    }
    if (best < 0) throw std::logic_error("universal vertex without a non-universal predecessor");
    int e = n - best;
    if (partial.contains(v)) {
      const Arc& a = partial.at(v);
      int lo = 1, hi = e;
      for (int d = 1; d < n; ++d) {
        VertexId w = at(p, d);
        auto sw = static_cast<std::size_t>(w);
        if (!ext.universal[sw] && ext.fwd[sw] < n - d) lo = std::max(lo, d + 1);
        if (!partial.contains(w)) continue;
        if (arc_contains(a, partial.at(w).tail)) lo = std::max(lo, d + 1);
        else hi = std::min(hi, d);
      }
      if (lo <= hi) e = hi;
    }
    heads[static_cast<std::size_t>((p + e) % n)].emplace_back(e, v);
  }
  EndpointOrder eo;
  eo.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto& hs = heads[static_cast<std::size_t>(k)];
    std::sort(hs.begin(), hs.end(), [](auto a, auto b) { return a.first > b.first; });
    for (auto [d, v] : hs) eo.push_back({v, true});
    eo.push_back({ord[static_cast<std::size_t>(k)], false});
  }
  return eo;
}

Representation place_endpoints(const EndpointOrder& eo, const PartialRepresentation& partial, int n) {
  const std::size_t m = eo.size();
  if (m != 2 * static_cast<std::size_t>(n)) throw std::invalid_argument("endpoint order has wrong size");
  std::vector<Rational> pos(m);
  auto coord = [&](const EndpointToken& t) -> const Rational& {
    const Arc& a = partial.at(t.vertex);
    return t.head ? a.head.pos() : a.tail.pos();
  };

  std::vector<std::size_t> fixed;
  std::vector<const Rational*> fixed_pos;
  for (std::size_t k = 0; k < m; ++k)
    if (partial.contains(eo[k].vertex)) {
      fixed.push_back(k);
      fixed_pos.push_back(&coord(eo[k]));
    }

  if (fixed.empty()) {
    for (std::size_t k = 0; k < m; ++k) pos[k] = ratio(static_cast<long>(k), static_cast<long>(m));
  } else {
    std::vector<int> rank = rank_positions(fixed_pos);
    std::vector<std::size_t> geometric(fixed.size());
    std::iota(geometric.begin(), geometric.end(), 0);
    // At a shared point the tail of the later arc precedes the head of the earlier one.
    std::sort(geometric.begin(), geometric.end(), [&](std::size_t a, std::size_t b) {
      if (rank[a] != rank[b]) return rank[a] < rank[b];
      return !eo[fixed[a]].head && eo[fixed[b]].head;
    });
    auto start = std::find(geometric.begin(), geometric.end(), std::size_t{0});
    std::rotate(geometric.begin(), start, geometric.end());
    for (std::size_t i = 0; i < fixed.size(); ++i)
      if (!(eo[fixed[geometric[i]]] == eo[fixed[i]]))
        throw Error(ErrorKind::OrderMismatch, "endpoint order contradicts predrawn arcs");

    for (std::size_t i = 0; i < fixed.size(); ++i) {
      std::size_t k1 = fixed[i], k2 = fixed[(i + 1) % fixed.size()];
      const Rational& p1 = *fixed_pos[i];
      Rational len = cw_distance(CirclePoint(p1), CirclePoint(*fixed_pos[(i + 1) % fixed.size()]));
      if (fixed.size() == 1) len = 1;
      std::size_t free = (k2 + m - k1 - 1) % m;
      if (fixed.size() == 1) free = m - 1;
      pos[k1] = p1;
      if (free > 0 && len == 0) throw Error(ErrorKind::OrderMismatch, "free endpoint between touching arcs");
      for (std::size_t s = 0; s < free; ++s)
        pos[(k1 + 1 + s) % m] = p1 + len * ratio(static_cast<long>(s + 1), static_cast<long>(free + 1));
    }
  }

  std::vector<Arc> arcs(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < m; ++k) {
    Arc& a = arcs[static_cast<std::size_t>(eo[k].vertex)];
    (eo[k].head ? a.head : a.tail) = CirclePoint(pos[k]);
  }
  for (const auto& [v, a] : partial) arcs[static_cast<std::size_t>(v)] = a;
  return Representation(std::move(arcs));
}

namespace {

Extension solve_connected(const Graph& g, const PartialRepresentation& partial) {
  const int n = g.size();
  Report valid = check_partial(g, partial, RepClass::NPHCA);
  if (!valid.ok()) return Extension::no("predrawn arcs are not a valid NPHCA representation: " + valid.to_text());

  if (g.is_complete()) {
    Arc base = partial.empty() ? Arc(Rational(0), Rational(1, 2)) : partial.begin()->second;
    std::vector<Arc> arcs(static_cast<std::size_t>(n), base);
    for (const auto& [v, a] : partial) arcs[static_cast<std::size_t>(v)] = a;
    Representation r(std::move(arcs));
    if (check(g, r, partial, RepClass::NPHCA).ok()) return Extension::yes(std::move(r));
    return Extension::no("replicated arcs fail verification");
  }

  TwinReduction tr = prune_twins(g, partial);
  const Graph& h = tr.graph;
  std::vector<VertexId> tails = by_tail(tr.partial);

  TouchingPairs touching = touching_pairs(tr.partial);
  std::vector<std::vector<VertexId>> candidates;
  if (auto ord = consecutive_cyclic_ordering(h, tails, touching)) candidates.push_back(std::move(*ord));
  if (tails.size() <= 2) {
    // Two predrawn tails do not fix the orientation; try the mirror image too.
    TouchingPairs swapped;
    for (auto [i, j] : touching) swapped.emplace_back(j, i);
    if (auto ord = consecutive_cyclic_ordering(h, tails, swapped)) candidates.emplace_back(ord->rbegin(), ord->rend());
  }
  if (candidates.empty()) return Extension::no("no consecutive cyclic ordering extends the predrawn tail order");

  std::string reason = "touching predrawn arcs conflict with the neighborhood order";
  auto attempt = [&](const std::vector<VertexId>& cand) -> std::optional<Representation> {
    if (!check_touching(h, tr.partial, cand)) return std::nullopt;
    Representation r;
    try {
      r = place_endpoints(build_endpoint_order(h, cand, tr.partial), tr.partial, h.size());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OrderMismatch) throw;
      reason = "endpoint order contradicts the predrawn geometry";
      return std::nullopt;
    }
    Representation full = tr.expand(r);
    if (check(g, full, partial, RepClass::NPHCA).ok()) return full;
    reason = "constructed representation fails verification";
    return std::nullopt;
  };
  for (const auto& cand : candidates)
    if (auto r = attempt(cand)) return Extension::yes(std::move(*r));
  if (tails.empty()) return Extension::no(reason);

  // Universal vertices and co-bipartite parts leave several tail orders, and the
  // one found above may disagree with the predrawn geometry. Search the rest.
  auto tree = tail_ordering_tree(h, touching);
  const LinearOrder rest(tails.begin() + 1, tails.end());
  for (const LinearOrder& target : {rest, LinearOrder(rest.rbegin(), rest.rend())}) {
    std::vector<LinearOrder> orders;
    try {
      orders = tree->enumerate_matching(tails.front(), target, kOrderSearchLimit);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::LimitExceeded) throw;
      return Extension::no(reason + " (ordering search skipped: too many orders)");
    }
    for (LinearOrder& o : orders) {
      o.insert(o.begin(), tails.front());
      if (auto r = attempt(o)) return Extension::yes(std::move(*r));
    }
  }
  return Extension::no(reason);
}

}  // namespace

Extension solve_nphca(const Graph& g, const PartialRepresentation& partial) {
  const int n = g.size();
  for (const auto& [v, a] : partial)
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidInput, "predrawn vertex out of range");
  if (n == 0) return Extension::yes(Representation{});
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  // Renumbering along a breadth-first search puts neighbors close together in memory.
  const std::vector<VertexId> order = breadth_first_order(g);
  std::vector<VertexId> index(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) index[static_cast<std::size_t>(order[i])] = static_cast<VertexId>(i);
  PartialRepresentation renamed;
  for (const auto& [v, a] : partial) renamed.set(index[static_cast<std::size_t>(v)], a);
  Extension e = solve_connected(g.induced(order), renamed);
  if (!e.ok()) return e;
  std::vector<Arc> arcs(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i)
    arcs[static_cast<std::size_t>(order[i])] = std::move((*e.representation)[static_cast<VertexId>(i)]);
  return Extension::yes(Representation(std::move(arcs)));
}

}  // namespace arcx

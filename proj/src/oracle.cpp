#include "arcx/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "arcx/errors.hpp"

namespace arcx {
namespace {

/// Distinct points of the circle in clockwise order. Anchored points carry a predrawn
/// coordinate; free points get evenly spaced coordinates in the gap they fall into.
class PointSequence {
 public:
  int add_anchor(const Rational& coord) {
    int id = static_cast<int>(anchor_.size());
    anchor_.push_back(coord);
    order_.push_back(id);
    return id;
  }

  int insert_free(std::size_t at) {
    int id = static_cast<int>(anchor_.size());
    anchor_.emplace_back(std::nullopt);
    order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(at), id);
    return id;
  }

  void erase(int id) {
    order_.erase(std::find(order_.begin(), order_.end(), id));
    anchor_.pop_back();
  }

  const std::vector<int>& order() const { return order_; }

  std::vector<CirclePoint> coordinates() const {
    const std::size_t m = order_.size();
    std::vector<CirclePoint> out(anchor_.size());
    std::vector<std::size_t> fixed;
    for (std::size_t k = 0; k < m; ++k)
      if (anchor_[static_cast<std::size_t>(order_[k])]) fixed.push_back(k);
    if (fixed.empty()) {
      for (std::size_t k = 0; k < m; ++k)
        out[static_cast<std::size_t>(order_[k])] = CirclePoint(ratio(static_cast<long>(k), static_cast<long>(m)));
      return out;
    }
    for (std::size_t f = 0; f < fixed.size(); ++f) {
      std::size_t k1 = fixed[f], k2 = fixed[(f + 1) % fixed.size()];
      const Rational& p1 = *anchor_[static_cast<std::size_t>(order_[k1])];
      Rational len = fixed.size() == 1 ? Rational(1)
                                       : cw_distance(CirclePoint(p1), CirclePoint(*anchor_[static_cast<std::size_t>(order_[k2])]));
      std::size_t free = fixed.size() == 1 ? m - 1 : (k2 + m - k1 - 1) % m;
      out[static_cast<std::size_t>(order_[k1])] = CirclePoint(p1);
      for (std::size_t s = 0; s < free; ++s)
        out[static_cast<std::size_t>(order_[(k1 + 1 + s) % m])] =
            CirclePoint(p1 + len * ratio(static_cast<long>(s + 1), static_cast<long>(free + 1)));
    }
    return out;
  }

 private:
  std::vector<std::optional<Rational>> anchor_;
  std::vector<int> order_;
};

/// An arc between two points of the sequence, by rank. Every predicate of the exact
/// geometry depends only on the cyclic order of the endpoints, so ranks suffice.
struct RankArc {
  int t, h;
};

struct Ranks {
  int m;
  int off(int from, int p) const { return (p - from + m) % m; }
  bool contains(const RankArc& a, int p) const { return off(a.t, p) <= off(a.t, a.h); }
  bool meet(const RankArc& a, const RankArc& b) const { return contains(a, b.t) || contains(b, a.t); }
  bool subset(const RankArc& in, const RankArc& out) const {
    return off(out.t, in.t) + off(in.t, in.h) <= off(out.t, out.h);
  }
};

bool pair_ok(const Ranks& r, const RankArc& a, const RankArc& b, bool adjacent, const ClassTraits& t) {
  bool meet = r.meet(a, b);
  if (meet != adjacent) return false;
  if (!meet) return true;
  bool same = a.t == b.t && a.h == b.h;
  if (same) return true;
  if (t.proper && (r.subset(a, b) || r.subset(b, a))) return false;
  if (t.normal && r.contains(a, b.t) && r.contains(a, b.h) && r.contains(b, a.t) && r.contains(b, a.h)) return false;
  return true;
}

}  // namespace

Extension oracle_extend(const Graph& g, const PartialRepresentation& partial, RepClass cls, OracleBounds bounds) {
  const int n = g.size();
  for (const auto& [v, a] : partial)
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidInput, "predrawn vertex out of range");
  if (cls == RepClass::UCA) throw Error(ErrorKind::InvalidInput, "oracle does not decide UCA");
  std::vector<VertexId> free;
  for (VertexId v = 0; v < n; ++v)
    if (!partial.contains(v)) free.push_back(v);
  if (static_cast<int>(free.size()) > bounds.max_free)
    throw Error(ErrorKind::BoundsExceeded, std::to_string(free.size()) + " free vertices exceed the oracle bound");
  if (2 * static_cast<int>(partial.size()) > bounds.max_anchors)
    throw Error(ErrorKind::BoundsExceeded, "too many predrawn endpoints for the oracle");
  if (!check_partial(g, partial, cls).ok()) return Extension::no("predrawn arcs are invalid");

  PointSequence points;
  std::map<Rational, int> anchor_id;
  for (const auto& [v, a] : partial)
    for (const CirclePoint* p : {&a.tail, &a.head})
      if (!anchor_id.count(p->pos())) anchor_id[p->pos()] = -1;
  for (auto& [coord, id] : anchor_id) id = points.add_anchor(coord);

  const ClassTraits traits_of = traits(cls);
  std::vector<std::pair<int, int>> ends(free.size());  // point ids of tail and head
  auto arcs_now = [&](std::size_t placed) {
    std::vector<CirclePoint> c = points.coordinates();
    std::vector<Arc> arcs(static_cast<std::size_t>(n));
    for (const auto& [v, a] : partial) arcs[static_cast<std::size_t>(v)] = a;
    for (std::size_t k = 0; k < placed; ++k)
      arcs[static_cast<std::size_t>(free[k])] =
          Arc(c[static_cast<std::size_t>(ends[k].first)], c[static_cast<std::size_t>(ends[k].second)]);
    return Representation(std::move(arcs));
  };
  std::map<VertexId, std::pair<int, int>> predrawn_ends;
  for (const auto& [v, a] : partial) predrawn_ends[v] = {anchor_id[a.tail.pos()], anchor_id[a.head.pos()]};
  std::vector<int> rank;
  auto consistent = [&](std::size_t placed) {
    const auto& order = points.order();
    rank.assign(order.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    auto at = [&](std::pair<int, int> e) {
      return RankArc{rank[static_cast<std::size_t>(e.first)], rank[static_cast<std::size_t>(e.second)]};
    };
    const Ranks r{static_cast<int>(order.size())};
    const VertexId v = free[placed - 1];
    const RankArc a = at(ends[placed - 1]);
    for (const auto& [w, e] : predrawn_ends)
      if (!pair_ok(r, a, at(e), g.adjacent(v, w), traits_of)) return false;
    for (std::size_t k = 0; k + 1 < placed; ++k)
      if (!pair_ok(r, a, at(ends[k]), g.adjacent(v, free[k]), traits_of)) return false;
    return true;
  };

  std::optional<Representation> witness;
  // Calls `next` with every choice of point for one endpoint: an existing point, or a
  // new point in each gap. Stops once a witness is found.
  auto choose_point = [&](const std::function<void(int)>& next) {
    const std::size_t m = points.order().size();
    for (std::size_t k = 0; k < m && !witness; ++k) next(points.order()[k]);
    std::size_t gaps = m == 0 ? 1 : m;
    for (std::size_t at = 1; at <= gaps && !witness; ++at) {
      int id = points.insert_free(m == 0 ? 0 : at);
      next(id);
      points.erase(id);
    }
  };
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (witness) return;
    if (k == free.size()) {
      Representation r = arcs_now(k);
      if (check(g, r, partial, cls).ok()) witness = std::move(r);
      return;
    }
    choose_point([&](int tail) {
      ends[k].first = tail;
      choose_point([&](int head) {
        ends[k].second = head;
        if (consistent(k + 1)) place(k + 1);
      });
    });
  };
  place(0);
  if (witness) return Extension::yes(std::move(*witness));
  return Extension::no("no arrangement of the free endpoints verifies");
}

}  // namespace arcx

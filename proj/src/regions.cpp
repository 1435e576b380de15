#include "arcx/regions.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>

#include "arcx/errors.hpp"

namespace arcx {

Rational Island::length() const {
  if (full) return Rational(1);
  if (from == to) return single_point() ? Rational(0) : Rational(1);
  return cw_distance(from, to);
}

CirclePoint Island::middle() const {
  if (full) return from;
  Rational half = length() / 2;
  return CirclePoint(from.pos() + half);
}

int RegionMap::piece_at(const CirclePoint& p) const {
  if (points.empty()) return 0;
  auto it = std::upper_bound(points.begin(), points.end(), p.pos());
  if (it == points.begin()) return 2 * static_cast<int>(points.size()) - 1;
  int i = static_cast<int>(it - points.begin()) - 1;
  return points[static_cast<std::size_t>(i)] == p.pos() ? 2 * i : 2 * i + 1;
}

Island RegionMap::run_span(int first, int last) const {
  const int total = piece_count();
  const int m = static_cast<int>(points.size());
  Island s;
  if (m == 0 || (last - first + total) % total + 1 == total) {
    s.full = true;
    s.from = CirclePoint(m == 0 ? Rational(0) : points[static_cast<std::size_t>(first / 2)]);
    s.to = s.from;
    return s;
  }
  auto at = [&](int i) { return CirclePoint(points[static_cast<std::size_t>(((i % m) + m) % m)]); };
  s.from = at(first / 2);
  s.from_closed = first % 2 == 0;
  s.to = last % 2 == 0 ? at(last / 2) : at(last / 2 + 1);
  s.to_closed = last % 2 == 0;
  return s;
}

std::vector<LinearSpan> RegionMap::linearized(int cls, const CirclePoint& anchor) const {
  const auto& pieces = classes[static_cast<std::size_t>(cls)].pieces;
  const int m = static_cast<int>(points.size());
  std::vector<LinearSpan> spans;
  if (m == 0) {
    spans.push_back({Rational(0), Rational(1), true, false});
    return spans;
  }
  for (int piece : pieces) {
    CirclePoint start(points[static_cast<std::size_t>(piece / 2)]);
    Rational x = cw_distance(anchor, start);
    if (piece % 2 == 0) {
      spans.push_back({x, x, true, true});
      continue;
    }
    CirclePoint end(points[static_cast<std::size_t>((piece / 2 + 1) % m)]);
    Rational len = m == 1 ? Rational(1) : cw_distance(start, end);
    Rational into = cw_distance(start, anchor);
    if (into > 0 && into < len) {
      spans.push_back({Rational(0), len - into, true, false});
      spans.push_back({x, Rational(1), false, false});
    } else {
      spans.push_back({x, x + len, false, false});
    }
  }
  std::sort(spans.begin(), spans.end(), [](const LinearSpan& a, const LinearSpan& b) { return a.lo < b.lo; });
  std::vector<LinearSpan> merged;
  for (const LinearSpan& s : spans) {
    if (!merged.empty() && merged.back().hi == s.lo && (merged.back().hi_closed || s.lo_closed)) {
      merged.back().hi = s.hi;
      merged.back().hi_closed = s.hi_closed;
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

namespace {

/// Maximal cyclic runs of pieces where `in` holds, as (first, last) pairs.
std::vector<std::pair<int, int>> runs(int total, const std::vector<char>& in) {
  std::vector<std::pair<int, int>> out;
  if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) {
    if (total > 0) out.emplace_back(0, total - 1);
    return out;
  }
  for (int i = 0; i < total; ++i) {
    if (!in[static_cast<std::size_t>(i)] || in[static_cast<std::size_t>((i + total - 1) % total)]) continue;
    int j = i;
    while (in[static_cast<std::size_t>((j + 1) % total)]) j = (j + 1) % total;
    out.emplace_back(i, j);
  }
  return out;
}

std::atomic<std::uint64_t> law_maps{0}, law_violations{0};

}  // namespace

std::optional<RegionMap> compute_regions(const CliqueStructure& cs, const PartialRepresentation& partial) {
  RegionMap rm;
  for (const auto& [v, a] : partial) {
    rm.points.push_back(a.tail.pos());
    rm.points.push_back(a.head.pos());
  }
  std::sort(rm.points.begin(), rm.points.end());
  rm.points.erase(std::unique(rm.points.begin(), rm.points.end()), rm.points.end());
  const int m = static_cast<int>(rm.points.size());
  const int total = m == 0 ? 1 : 2 * m;

  std::vector<std::vector<VertexId>> cover(static_cast<std::size_t>(total));
  for (const auto& [v, a] : partial) {
    int first = rm.piece_at(a.tail), last = rm.piece_at(a.head);
    for (int i = first;; i = (i + 1) % total) {
      cover[static_cast<std::size_t>(i)].push_back(v);
      if (i == last) break;
    }
  }

  std::map<std::vector<VertexId>, int> by_pre;
  rm.class_of.resize(cs.cliques.size());
  for (std::size_t c = 0; c < cs.cliques.size(); ++c) {
    std::vector<VertexId> pre;
    for (VertexId v : cs.cliques[c])
      if (partial.contains(v)) pre.push_back(v);
    auto [it, fresh] = by_pre.emplace(pre, static_cast<int>(rm.classes.size()));
    if (fresh) rm.classes.push_back({pre, {}, {}, {}});
    rm.class_of[c] = it->second;
    rm.classes[static_cast<std::size_t>(it->second)].cliques.push_back(static_cast<CliqueId>(c));
  }

  rm.piece_class.assign(static_cast<std::size_t>(total), -1);
  for (const auto& c : cover) rm.cover_size.push_back(static_cast<int>(c.size()));
  for (int i = 0; i < total; ++i) {
    auto it = by_pre.find(cover[static_cast<std::size_t>(i)]);
    if (it == by_pre.end()) continue;
    rm.piece_class[static_cast<std::size_t>(i)] = it->second;
    rm.classes[static_cast<std::size_t>(it->second)].pieces.push_back(i);
  }

  for (std::size_t k = 0; k < rm.classes.size(); ++k) {
    auto& cls = rm.classes[k];
    if (cls.pieces.empty()) return std::nullopt;
    std::vector<char> in(static_cast<std::size_t>(total), 0);
    for (int p : cls.pieces) in[static_cast<std::size_t>(p)] = 1;
    for (auto [first, last] : runs(total, in)) cls.islands.push_back(rm.run_span(first, last));
  }
  law_maps.fetch_add(1, std::memory_order_relaxed);
  law_violations.fetch_add(region_law_violations(rm), std::memory_order_relaxed);
  return rm;
}

std::size_t region_law_violations(const RegionMap& rm) {
  const int total = rm.piece_count();
  std::size_t bad = 0;
  for (std::size_t x = 0; x < rm.classes.size(); ++x) {
    // gap id of each piece outside class x, -1 inside
    std::vector<char> outside(static_cast<std::size_t>(total), 1);
    for (int p : rm.classes[x].pieces) outside[static_cast<std::size_t>(p)] = 0;
    std::vector<int> gap(static_cast<std::size_t>(total), -1);
    int id = 0;
    for (auto [first, last] : runs(total, outside)) {
      for (int i = first;; i = (i + 1) % total) {
        gap[static_cast<std::size_t>(i)] = id;
        if (i == last) break;
      }
      ++id;
    }
    for (std::size_t y = 0; y < rm.classes.size(); ++y) {
      if (y == x) continue;
      std::set<int> met;
      for (int p : rm.classes[y].pieces) met.insert(gap[static_cast<std::size_t>(p)]);
      if (met.count(-1) || met.size() > 1) ++bad;
    }
  }
  return bad;
}

RegionLawStats region_law_stats() { return {law_maps.load(), law_violations.load()}; }

std::optional<CliqueId> single_island_clique(const RegionMap& rm) {
  const RegionMap::Class* best = nullptr;
  for (const auto& cls : rm.classes)
    if (cls.islands.size() == 1 && (!best || cls.pre.size() > best->pre.size())) best = &cls;
  if (!best) return std::nullopt;
  return best->cliques.front();
}

Rational epsilon(const RegionMap& rm, int n) {
  std::optional<Rational> shortest;
  for (const auto& cls : rm.classes)
    for (const Island& i : cls.islands) {
      Rational len = i.length();
      if (len > 0 && (!shortest || len < *shortest)) shortest = len;
    }
  if (!shortest) throw Error(ErrorKind::NoNontrivialIsland, "every island is a single point");
  return *shortest / (2 * n + 1);
}

Rational placement_epsilon(const RegionMap& rm, int n) {
  const std::size_t m = rm.points.size();
  Rational shortest(1);
  if (m >= 2)
    for (std::size_t i = 0; i < m; ++i) {
      Rational len = cw_distance(CirclePoint(rm.points[i]), CirclePoint(rm.points[(i + 1) % m]));
      if (len < shortest) shortest = len;
    }
  return shortest / (4 * n + 2);
}

PartialPrec linear_prec(const RegionMap& rm, const CirclePoint& anchor) {
  struct Bounds {
    LinearSpan first, last;
  };
  std::vector<Bounds> bounds;
  for (std::size_t k = 0; k < rm.classes.size(); ++k) {
    auto spans = rm.linearized(static_cast<int>(k), anchor);
    bounds.push_back({spans.front(), spans.back()});
  }
  PartialPrec prec;
  for (std::size_t x = 0; x < bounds.size(); ++x)
    for (std::size_t y = 0; y < bounds.size(); ++y) {
      if (x == y) continue;
      const LinearSpan& a = bounds[x].last;
      const LinearSpan& b = bounds[y].first;
      bool before = a.hi < b.lo || (a.hi == b.lo && !(a.hi_closed && b.lo_closed));
      if (!before) continue;
      for (CliqueId c : rm.classes[x].cliques)
        for (CliqueId d : rm.classes[y].cliques) prec.emplace_back(c, d);
    }
  return prec;
}

PartialPrec build_prec(const RegionMap& rm, CliqueId d, const CirclePoint& p_d) {
  PartialPrec prec;
  for (auto [a, b] : linear_prec(rm, p_d))
    if (a != d && b != d) prec.emplace_back(a, b);
  for (CliqueId c = 0; c < static_cast<CliqueId>(rm.class_of.size()); ++c)
    if (c != d) prec.emplace_back(d, c);
  return prec;
}

bool GapSet::contains_piece(int piece, int piece_count) const {
  return (piece - first + piece_count) % piece_count <= (last - first + piece_count) % piece_count;
}

std::vector<GapSet> gap_sets(const RegionMap& rm) {
  const int total = rm.piece_count();
  std::vector<GapSet> out;
  for (std::size_t k = 0; k < rm.classes.size(); ++k) {
    std::vector<char> outside(static_cast<std::size_t>(total), 1);
    for (int p : rm.classes[k].pieces) outside[static_cast<std::size_t>(p)] = 0;
    if (std::none_of(outside.begin(), outside.end(), [](char c) { return c != 0; })) continue;
    for (auto [first, last] : runs(total, outside)) {
      GapSet gap{static_cast<int>(k), first, last, {}};
      std::map<int, std::size_t> seen;
      for (int i = first;; i = (i + 1) % total) {
        int c = rm.piece_class[static_cast<std::size_t>(i)];
        if (c >= 0) ++seen[c];
        if (i == last) break;
      }
      for (auto [c, count] : seen) {
        const auto& cls = rm.classes[static_cast<std::size_t>(c)];
        if (count != cls.pieces.size()) throw std::logic_error("a region meets two gaps of another region");
        gap.cliques.insert(gap.cliques.end(), cls.cliques.begin(), cls.cliques.end());
      }
      std::sort(gap.cliques.begin(), gap.cliques.end());
      out.push_back(std::move(gap));
    }
  }
  return out;
}

}  // namespace arcx

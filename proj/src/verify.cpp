#include "arcx/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arcx/cliques.hpp"

namespace arcx {

const char* to_string(RepClass c) {
  switch (c) {
    case RepClass::CA: return "CA";
    case RepClass::NCA: return "NCA";
    case RepClass::HCA: return "HCA";
    case RepClass::PCA: return "PCA";
    case RepClass::UCA: return "UCA";
    case RepClass::NHCA: return "NHCA";
    case RepClass::PHCA: return "PHCA";
    case RepClass::NPHCA: return "NPHCA";
  }
  return "?";
}

std::optional<RepClass> parse_rep_class(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (RepClass c : {RepClass::CA, RepClass::NCA, RepClass::HCA, RepClass::PCA, RepClass::UCA, RepClass::NHCA,
                     RepClass::PHCA, RepClass::NPHCA})
    if (upper == to_string(c)) return c;
  return std::nullopt;
}

ClassTraits traits(RepClass c) {
  switch (c) {
    case RepClass::CA: return {};
    case RepClass::NCA: return {.normal = true};
    case RepClass::HCA: return {.helly = true};
    case RepClass::PCA: return {.proper = true};
    case RepClass::UCA: return {.unit = true};
    case RepClass::NHCA: return {.normal = true, .helly = true};
    case RepClass::PHCA: return {.helly = true, .proper = true};
    case RepClass::NPHCA: return {.normal = true, .helly = true, .proper = true};
  }
  return {};
}

namespace {

/// Endpoints replaced by their rank among the distinct positions. Containment and
/// subset tests compare clockwise distances from a common point, which ranks keep.
struct Ranked {
  int m = 0;
  std::vector<int> tail, head;

  int cw(int from, int to) const { return to >= from ? to - from : to - from + m; }
  bool contains(VertexId v, int p) const {
    const auto i = static_cast<std::size_t>(v);
    return cw(tail[i], p) <= cw(tail[i], head[i]);
  }
  bool meet(VertexId u, VertexId v) const {
    return contains(u, tail[static_cast<std::size_t>(v)]) || contains(v, tail[static_cast<std::size_t>(u)]);
  }
  bool same(VertexId u, VertexId v) const {
    const auto i = static_cast<std::size_t>(u), j = static_cast<std::size_t>(v);
    return tail[i] == tail[j] && head[i] == head[j];
  }
  bool subset(VertexId inner, VertexId outer) const {
    const auto i = static_cast<std::size_t>(inner), o = static_cast<std::size_t>(outer);
    int start = cw(tail[o], tail[i]), end = cw(tail[o], head[i]);
    return start <= end && end <= cw(tail[o], head[o]);
  }
  bool connected(VertexId u, VertexId v) const {
    if (same(u, v)) return true;
    const auto i = static_cast<std::size_t>(u), j = static_cast<std::size_t>(v);
    return !(contains(u, tail[j]) && contains(u, head[j]) && contains(v, tail[i]) && contains(v, head[i]));
  }
};

Ranked rank_arcs(const Representation& r) {
  const std::size_t n = static_cast<std::size_t>(r.size());
  std::vector<const Rational*> values;
  values.reserve(2 * n);
  for (const Arc& a : r.arcs()) {
    values.push_back(&a.tail.pos());
    values.push_back(&a.head.pos());
  }
  std::vector<int> rank = rank_positions(values);
  Ranked out;
  out.tail.resize(n);
  out.head.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.tail[i] = rank[2 * i];
    out.head[i] = rank[2 * i + 1];
  }
  out.m = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
  return out;
}

Graph graph_of(const Ranked& k) {
  const int n = static_cast<int>(k.tail.size());
  std::vector<VertexId> by_tail(static_cast<std::size_t>(n));
  std::iota(by_tail.begin(), by_tail.end(), 0);
  std::sort(by_tail.begin(), by_tail.end(), [&](VertexId a, VertexId b) {
    return k.tail[static_cast<std::size_t>(a)] < k.tail[static_cast<std::size_t>(b)];
  });
  std::vector<int> tails;
  tails.reserve(by_tail.size());
  for (VertexId v : by_tail) tails.push_back(k.tail[static_cast<std::size_t>(v)]);

  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  auto collect = [&](VertexId v, int lo, int hi) {
    auto first = std::lower_bound(tails.begin(), tails.end(), lo);
    auto last = std::upper_bound(tails.begin(), tails.end(), hi);
    for (auto it = first; it < last; ++it) {
      VertexId w = by_tail[static_cast<std::size_t>(it - tails.begin())];
      if (w != v) adj[static_cast<std::size_t>(v)].push_back(w);
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    int t = k.tail[static_cast<std::size_t>(v)], h = k.head[static_cast<std::size_t>(v)];
    if (t <= h) {
      collect(v, t, h);
    } else {
      collect(v, t, k.m - 1);
      collect(v, 0, h);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

template <typename Pred>
bool all_edges(const Graph& h, Pred pred) {
  for (auto [u, v] : h.edges())
    if (!pred(u, v)) return false;
  return true;
}

bool proper(const Ranked& k, const Graph& h) {
  return all_edges(h, [&](VertexId u, VertexId v) { return k.same(u, v) || (!k.subset(u, v) && !k.subset(v, u)); });
}

bool normal(const Ranked& k, const Graph& h) {
  return all_edges(h, [&](VertexId u, VertexId v) { return k.connected(u, v); });
}

bool helly(const Ranked& k, const Graph& h) {
  auto cliques = maximal_cliques(h, static_cast<std::size_t>(-1));
  for (const auto& clique : *cliques) {
    if (clique.size() < 3) continue;
    bool witnessed = std::any_of(clique.begin(), clique.end(), [&](VertexId cand) {
      int p = k.tail[static_cast<std::size_t>(cand)];
      return std::all_of(clique.begin(), clique.end(), [&](VertexId w) { return k.contains(w, p); });
    });
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace

Graph intersection_graph(const Representation& r) { return graph_of(rank_arcs(r)); }

bool realizes(const Graph& g, const Representation& r) {
  if (g.size() != r.size()) return false;
  return intersection_graph(r) == g;
}

bool extends(const Representation& r, const PartialRepresentation& partial) {
  for (const auto& [v, arc] : partial) {
    if (v < 0 || v >= r.size()) return false;
    if (!(r[v] == arc)) return false;
  }
  return true;
}

bool is_proper(const Representation& r) {
  Ranked k = rank_arcs(r);
  return proper(k, graph_of(k));
}

bool is_normal(const Representation& r) {
  Ranked k = rank_arcs(r);
  return normal(k, graph_of(k));
}

bool is_unit(const Representation& r) {
  if (r.size() == 0) return true;
  Rational len = arc_length(r[0]);
  if (len == 0) return false;
  for (const Arc& a : r.arcs())
    if (arc_length(a) != len) return false;
  return true;
}

bool is_helly(const Representation& r) {
  Ranked k = rank_arcs(r);
  return helly(k, graph_of(k));
}

bool Report::failed(std::string_view predicate) const {
  return std::any_of(failures.begin(), failures.end(), [&](const Failure& f) { return f.predicate == predicate; });
}

std::string Report::to_text() const {
  if (ok()) return "ok\n";
  std::ostringstream out;
  for (const auto& f : failures) out << f.predicate << ": " << f.detail << '\n';
  return out.str();
}

namespace {

void check_class(Report& report, const Representation& r, const Ranked& k, const Graph& h, RepClass cls) {
  ClassTraits t = traits(cls);
  if (t.normal && !normal(k, h)) report.failures.push_back({"normal", "two arcs intersect in two components"});
  if (t.proper && !proper(k, h)) report.failures.push_back({"proper", "an arc properly contains another"});
  if (t.unit && !is_unit(r)) report.failures.push_back({"unit", "arc lengths differ or are zero"});
  if (t.helly && !helly(k, h)) report.failures.push_back({"helly", "a clique of arcs has no common point"});
}

}  // namespace

Report check(const Graph& g, const Representation& r, const PartialRepresentation& partial, RepClass cls) {
  Report report;
  if (r.size() != g.size()) {
    report.failures.push_back({"complete", "representation has " + std::to_string(r.size()) + " arcs for " +
                                               std::to_string(g.size()) + " vertices"});
    return report;
  }
  Ranked k = rank_arcs(r);
  Graph h = graph_of(k);
  if (!(h == g)) report.failures.push_back({"realizes", "intersection graph differs from G"});
  if (!extends(r, partial)) report.failures.push_back({"extends", "a predrawn arc was changed"});
  check_class(report, r, k, h, cls);
  return report;
}

Report check_partial(const Graph& g, const PartialRepresentation& partial, RepClass cls) {
  Report report;
  std::vector<VertexId> vs = partial.vertices();
  for (VertexId v : vs) {
    if (v < 0 || v >= g.size()) {
      report.failures.push_back({"domain", "predrawn vertex " + std::to_string(v) + " not in G"});
      return report;
    }
  }
  std::vector<Arc> arcs;
  arcs.reserve(vs.size());
  for (VertexId v : vs) arcs.push_back(partial.at(v));
  Representation sub(std::move(arcs));
  Ranked k = rank_arcs(sub);
  Graph h = graph_of(k);
  if (!(h == g.induced(vs))) report.failures.push_back({"realizes", "predrawn arcs do not realize G[V']"});
  check_class(report, sub, k, h, cls);
  return report;
}

}  // namespace arcx

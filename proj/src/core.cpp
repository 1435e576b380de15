#include "arcx/core.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <queue>

namespace arcx {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    if (part.empty()) throw bad();
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  Rational q;
  if (slash == std::string::npos) {
    check_digits(s, true);
    q = Rational(mpz_class(s[0] == '+' ? s.substr(1) : s), 1);
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    mpz_class d(den);
    if (d == 0) throw bad();
    q = Rational(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num);
  q /= den;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Arc& a) {
  return os << '[' << a.tail.pos().get_str() << ", " << a.head.pos().get_str() << ']';
}

Rational wrap_unit(const Rational& q) {
  if (q >= 0 && q < 1) return q;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

std::vector<int> rank_positions(const std::vector<const Rational*>& values) {
  // floor(x * 2^62) orders almost every pair without touching the rationals again.
  struct Entry {
    std::uint64_t key;
    std::size_t i;
  };
  std::vector<Entry> entries(values.size());
  mpz_class scaled;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Rational& x = *values[i];
    mpz_mul_2exp(scaled.get_mpz_t(), x.get_num_mpz_t(), 62);
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    entries[i] = {mpz_get_ui(scaled.get_mpz_t()), i};
  }
  auto same = [&](const Entry& a, const Entry& b) { return a.key == b.key && *values[a.i] == *values[b.i]; };
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key < b.key;
    return *values[a.i] < *values[b.i];
  });
  std::vector<int> rank(values.size());
  int r = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k > 0 && !same(entries[k], entries[k - 1])) ++r;
    rank[entries[k].i] = r;
  }
  return rank;
}

Rational cw_distance(const CirclePoint& a, const CirclePoint& b) {
  Rational d = b.pos() - a.pos();
  if (d < 0) d += 1;
  return d;
}

Rational arc_length(const Arc& a) { return cw_distance(a.tail, a.head); }

bool arc_contains(const Arc& a, const CirclePoint& p) {
  return cw_distance(a.tail, p) <= arc_length(a);
}

bool arcs_intersect(const Arc& a, const Arc& b) {
  return arc_contains(a, b.tail) || arc_contains(b, a.tail);
}

bool arc_subset(const Arc& inner, const Arc& outer) {
  Rational start = cw_distance(outer.tail, inner.tail);
  return start + arc_length(inner) <= arc_length(outer);
}

bool intersection_connected(const Arc& a, const Arc& b) {
  if (!arcs_intersect(a, b)) throw std::domain_error("intersection_connected: arcs are disjoint");
  if (a == b) return true;
  bool two_components = arc_contains(a, b.tail) && arc_contains(a, b.head) && arc_contains(b, a.tail) &&
                        arc_contains(b, a.head);
  return !two_components;
}

Graph::Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) : adj_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::from_adjacency(std::vector<std::vector<VertexId>> adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<VertexId>> sym(adj.size());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : adj[static_cast<std::size_t>(u)]) {
      if (v == u) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
      if (v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
      sym[static_cast<std::size_t>(u)].push_back(v);
      sym[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& list : sym) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  Graph g;
  g.adj_ = std::move(sym);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return total / 2;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
  auto insert = [](std::vector<VertexId>& list, VertexId x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[static_cast<std::size_t>(u)], v);
  insert(adj_[static_cast<std::size_t>(v)], u);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<VertexId> Graph::closed_neighborhood(VertexId v) const {
  std::vector<VertexId> out = neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

bool Graph::is_complete() const {
  for (int v = 0; v < size(); ++v)
    if (!is_universal(v)) return false;
  return true;
}

bool Graph::is_connected() const {
  if (size() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(size()), 0);
  std::queue<VertexId> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == size();
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<VertexId>& keep) const {
  std::vector<int> index(static_cast<std::size_t>(size()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  Graph sub(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    auto& list = sub.adj_[i];
    for (VertexId w : neighbors(keep[i]))
      if (int j = index[static_cast<std::size_t>(w)]; j >= 0) list.push_back(j);
    std::sort(list.begin(), list.end());
  }
  return sub;
}

std::vector<VertexId> breadth_first_order(const Graph& g) {
  const int n = g.size();
  std::vector<VertexId> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (VertexId root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (VertexId w : g.neighbors(order[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
  }
  return order;
}

std::vector<VertexId> PartialRepresentation::vertices() const {
  std::vector<VertexId> out;
  out.reserve(arcs_.size());
  for (const auto& [v, a] : arcs_) out.push_back(v);
  return out;
}

PartialRepresentation Representation::restrict_to(const std::vector<VertexId>& vertices) const {
  PartialRepresentation out;
  for (VertexId v : vertices) out.set(v, (*this)[v]);
  return out;
}

CyclicOrder::CyclicOrder(std::vector<int> seq) : seq_(std::move(seq)) {
  if (!seq_.empty()) std::rotate(seq_.begin(), std::min_element(seq_.begin(), seq_.end()), seq_.end());
}

std::vector<int> CyclicOrder::cut_at(int first) const {
  std::vector<int> out = seq_;
  auto it = std::find(out.begin(), out.end(), first);
  if (it == out.end()) throw std::out_of_range("cut_at: element not in cyclic order");
  std::rotate(out.begin(), it, out.end());
  return out;
}

CyclicOrder CyclicOrder::reversed() const {
  std::vector<int> r(seq_.rbegin(), seq_.rend());
  return CyclicOrder(std::move(r));
}

bool cyclically_consecutive(const std::vector<int>& order, const std::vector<int>& subset) {
  if (subset.empty() || subset.size() >= order.size()) return true;
  std::vector<char> member(order.size(), 0);
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (int x : subset) member[pos.at(x)] = 1;
  std::size_t starts = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t prev = (i + order.size() - 1) % order.size();
    if (member[i] && !member[prev]) ++starts;
  }
  return starts == 1;
}

}  // namespace arcx

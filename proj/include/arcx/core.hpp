// Exact circle geometry and graph model shared by all solvers.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcx {

using Rational = mpq_class;
using VertexId = int;

/// Parses "a/b", "a" or "-a/b" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// num/den in canonical form.
Rational ratio(long num, long den);
std::string to_string(const Rational& q);

/// Reduces q into [0, 1).
Rational wrap_unit(const Rational& q);

/// Dense ranks of values in [0, 1): equal values share a rank and order is kept.
std::vector<int> rank_positions(const std::vector<const Rational*>& values);

/// A point on the circle of circumference 1, measured clockwise from 0.
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(Rational pos) : pos_(wrap_unit(pos)) {}

  const Rational& pos() const { return pos_; }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.pos_ == b.pos_; }
  friend bool operator<(const CirclePoint& a, const CirclePoint& b) { return a.pos_ < b.pos_; }

 private:
  Rational pos_{0};
};

/// Clockwise distance from a to b, in [0, 1).
Rational cw_distance(const CirclePoint& a, const CirclePoint& b);

/// Closed arc traversed clockwise from tail to head. tail == head is a single point.
struct Arc {
  CirclePoint tail;
  CirclePoint head;

  Arc() = default;
  Arc(CirclePoint t, CirclePoint h) : tail(std::move(t)), head(std::move(h)) {}
  Arc(const Rational& t, const Rational& h) : tail(t), head(h) {}

  bool degenerate() const { return tail == head; }
  friend bool operator==(const Arc& a, const Arc& b) = default;
};

std::ostream& operator<<(std::ostream& os, const Arc& a);

bool arc_contains(const Arc& a, const CirclePoint& p);
bool arcs_intersect(const Arc& a, const Arc& b);
/// True iff `inner` is a subset of `outer` (equal arcs count).
bool arc_subset(const Arc& inner, const Arc& outer);
/// False exactly when the intersection has two components. Throws std::domain_error if disjoint.
bool intersection_connected(const Arc& a, const Arc& b);
Rational arc_length(const Arc& a);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}
  Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);
  /// Takes ownership of raw adjacency lists; sorts, deduplicates and symmetrizes them.
  static Graph from_adjacency(std::vector<std::vector<VertexId>> adj);

  int size() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;

  /// Adds an edge; self-loops are rejected, duplicates ignored.
  void add_edge(VertexId u, VertexId v);
  bool adjacent(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// N[v], sorted.
  std::vector<VertexId> closed_neighborhood(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  bool is_universal(VertexId v) const { return degree(v) == size() - 1; }
  bool is_complete() const;
  bool is_connected() const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Subgraph induced by `keep` (in that order); vertex i of the result is keep[i].
  Graph induced(const std::vector<VertexId>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<std::vector<VertexId>> adj_;
};

/// Arcs for a subset of the vertices.
class PartialRepresentation {
 public:
  void set(VertexId v, Arc a) { arcs_[v] = std::move(a); }
  bool contains(VertexId v) const { return arcs_.count(v) != 0; }
  const Arc& at(VertexId v) const { return arcs_.at(v); }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  auto begin() const { return arcs_.begin(); }
  auto end() const { return arcs_.end(); }
  std::vector<VertexId> vertices() const;

  friend bool operator==(const PartialRepresentation&, const PartialRepresentation&) = default;

 private:
  std::map<VertexId, Arc> arcs_;
};

/// One arc per vertex 0..n-1.
class Representation {
 public:
  Representation() = default;
  explicit Representation(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {}

  int size() const { return static_cast<int>(arcs_.size()); }
  const Arc& operator[](VertexId v) const { return arcs_[static_cast<std::size_t>(v)]; }
  Arc& operator[](VertexId v) { return arcs_[static_cast<std::size_t>(v)]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  PartialRepresentation restrict_to(const std::vector<VertexId>& vertices) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::vector<Arc> arcs_;
};

using LinearOrder = std::vector<int>;

/// Cyclic sequence of distinct ids, stored rotated so the least id comes first.
/// Vertices in breadth-first order, one search per component, roots by increasing id.
std::vector<VertexId> breadth_first_order(const Graph& g);

class CyclicOrder {
 public:
  CyclicOrder() = default;
  explicit CyclicOrder(std::vector<int> seq);

  const std::vector<int>& sequence() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  /// Linear order starting at `first`.
  std::vector<int> cut_at(int first) const;
  CyclicOrder reversed() const;

  friend auto operator<=>(const CyclicOrder&, const CyclicOrder&) = default;

 private:
  std::vector<int> seq_;
};

/// True iff `subset` occupies a cyclically contiguous block of `order`.
bool cyclically_consecutive(const std::vector<int>& order, const std::vector<int>& subset);

}  // namespace arcx

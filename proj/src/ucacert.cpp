#include "arcx/ucacert.hpp"

#include <set>
#include <stdexcept>

#include "arcx/errors.hpp"

namespace arcx {

namespace {

/// x[to] - x[from] <= bound, or < bound when strict. Index n stands for the constant 0.
struct Constraint {
  int from, to;
  Rational bound;
  bool strict;
};

void validate(const Graph& g, const PartialRepresentation& partial, const UcaCertificate& cert) {
  const int n = g.size();
  if (cert.circumference <= 1) throw Error(ErrorKind::MalformedCertificate, "circumference must exceed 1");
  if (static_cast<int>(cert.order.size()) != n)
    throw Error(ErrorKind::MalformedCertificate, "order must list every vertex once");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : cert.order)
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++)
      throw Error(ErrorKind::MalformedCertificate, "order must list every vertex once");
  for (auto [u, v] : cert.wrap_edges)
    if (u < 0 || v < 0 || u >= n || v >= n || !g.adjacent(u, v))
      throw Error(ErrorKind::MalformedCertificate, "wrap edge " + std::to_string(u) + "-" + std::to_string(v) +
                                                       " is not an edge");
  for (const auto& [v, a] : partial)
    if (v < 0 || v >= n) throw Error(ErrorKind::MalformedCertificate, "predrawn vertex out of range");
}

std::vector<Constraint> system(const Graph& g, const PartialRepresentation& partial, const UcaCertificate& cert,
                               bool relax) {
  const int n = g.size();
  const Rational& l = cert.circumference;
  const bool strict = !relax;
  std::vector<Constraint> out;
  for (VertexId v = 0; v < n; ++v) {
    if (partial.contains(v)) {
      Rational fixed = partial.at(v).tail.pos() * l;
      out.push_back({n, v, fixed, false});
      out.push_back({v, n, -fixed, false});
    } else {
      out.push_back({v, n, Rational(0), false});
      out.push_back({n, v, l, strict});
    }
  }
  std::set<std::pair<VertexId, VertexId>> wrap;
  for (auto [u, v] : cert.wrap_edges) wrap.insert(std::minmax(u, v));
  for (std::size_t a = 0; a < cert.order.size(); ++a)
    for (std::size_t b = a + 1; b < cert.order.size(); ++b) {
      const int i = cert.order[a], j = cert.order[b];
      if (!g.adjacent(i, j)) {
        out.push_back({j, i, Rational(-1), strict});
        out.push_back({i, j, l - 1, strict});
      } else if (wrap.count(std::minmax(i, j))) {
        out.push_back({j, i, 1 - l, false});
      } else {
        out.push_back({j, i, Rational(0), false});
        out.push_back({i, j, Rational(1), false});
      }
    }
  return out;
}

/// c - k*eps for an infinitesimal eps > 0.
struct Value {
  Rational c;
  long k = 0;
};

bool less(const Value& a, const Value& b) { return a.c < b.c || (a.c == b.c && a.k > b.k); }

}  // namespace

bool satisfies(const Graph& g, const PartialRepresentation& partial, const UcaCertificate& cert,
               const std::vector<Rational>& x, bool relax_strict) {
  validate(g, partial, cert);
  if (static_cast<int>(x.size()) != g.size()) return false;
  auto at = [&](int i) { return i == g.size() ? Rational(0) : x[static_cast<std::size_t>(i)]; };
  for (const Constraint& c : system(g, partial, cert, relax_strict)) {
    Rational d = at(c.to) - at(c.from);
    if (c.strict ? !(d < c.bound) : !(d <= c.bound)) return false;
  }
  return true;
}

Representation witness_to_representation(const Graph& g, const UcaCertificate& cert, const std::vector<Rational>& x) {
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < g.size(); ++v) {
    const Rational& t = x[static_cast<std::size_t>(v)];
    arcs.emplace_back(CirclePoint(t / cert.circumference), CirclePoint((t + 1) / cert.circumference));
  }
  return Representation(std::move(arcs));
}

CertificateResult check_certificate(const Graph& g, const PartialRepresentation& partial, const UcaCertificate& cert,
                                    bool relax_strict) {
  validate(g, partial, cert);
  const int n = g.size();
  const auto cons = system(g, partial, cert, relax_strict);

  // Shortest paths for y = -x give the least solution for x. A constraint
  // x_to - x_from <= b reads y_from <= y_to + b, an edge to -> from.
  std::vector<std::optional<Value>> y(static_cast<std::size_t>(n + 1));
  y[static_cast<std::size_t>(n)] = Value{Rational(0), 0};
  bool changed = true;
  for (int round = 0; round <= n + 1 && changed; ++round) {
    changed = false;
    for (const Constraint& c : cons) {
      const auto& src = y[static_cast<std::size_t>(c.to)];
      if (!src) continue;
      Value cand{src->c + c.bound, src->k + (c.strict ? 1 : 0)};
      auto& dst = y[static_cast<std::size_t>(c.from)];
      if (!dst || less(cand, *dst)) {
        dst = cand;
        changed = true;
      }
    }
  }
  CertificateResult res;
  if (changed) {
    res.reason = "the constraint system has a negative cycle";
    return res;
  }

  // Pick eps small enough that every constraint holds for the real values.
  auto sym = [&](int i) { return Value{-y[static_cast<std::size_t>(i)]->c, -y[static_cast<std::size_t>(i)]->k}; };
  Rational eps(1);
  for (const Constraint& c : cons) {
    Value a = sym(c.from), b = sym(c.to);
    // x_to - x_from = (b.c - a.c) - (b.k - a.k) eps
    Rational slack = c.bound - (b.c - a.c);
    long dk = a.k - b.k;
    if (slack > 0 && dk > 0) {
      Rational cap = slack / (dk + 1);
      if (cap < eps) eps = cap;
    }
  }
  res.x.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Value v = sym(i);
    res.x[static_cast<std::size_t>(i)] = v.c - v.k * eps;
  }
  if (!satisfies(g, partial, cert, res.x, relax_strict))
    throw std::logic_error("witness violates the constraint system");
  res.feasible = true;
  res.representation = witness_to_representation(g, cert, res.x);
  res.verification = check(g, *res.representation, partial, RepClass::UCA);
  return res;
}

}  // namespace arcx

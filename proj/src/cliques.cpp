#include "arcx/cliques.hpp"

#include <algorithm>
#include <cstdint>

#include "arcx/errors.hpp"

namespace arcx {
namespace {

using Set = std::vector<VertexId>;
using Word = std::uint64_t;
using Bits = std::vector<Word>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](Word w) { return w != 0; });
}

/// Bron-Kerbosch with pivoting. Each outer call works inside N(v) on local bitsets.
class Enumerator {
 public:
  Enumerator(const Graph& g, std::size_t limit)
      : g_(g), limit_(limit), local_(static_cast<std::size_t>(g.size()), -1) {}

  bool run(std::vector<Set>& out) {
    out_ = &out;
    std::vector<VertexId> order = degeneracy_order();
    std::vector<int> rank(static_cast<std::size_t>(g_.size()));
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    for (VertexId v : order) {
      const Set& nv = g_.neighbors(v);
      ids_ = nv;
      words_ = (ids_.size() + 63) / 64;
      for (std::size_t i = 0; i < ids_.size(); ++i) local_[static_cast<std::size_t>(ids_[i])] = static_cast<int>(i);
      adj_.assign(ids_.size(), Bits(words_, 0));
      Bits p(words_, 0), x(words_, 0);
      for (std::size_t i = 0; i < ids_.size(); ++i) {
        VertexId u = ids_[i];
        (rank[static_cast<std::size_t>(u)] > rank[static_cast<std::size_t>(v)] ? p : x)[i / 64] |= Word{1} << (i % 64);
        for (VertexId w : g_.neighbors(u)) {
          int j = local_[static_cast<std::size_t>(w)];
          if (j >= 0) adj_[i][static_cast<std::size_t>(j) / 64] |= Word{1} << (j % 64);
        }
      }
      for (VertexId u : ids_) local_[static_cast<std::size_t>(u)] = -1;
      Set r{v};
      if (!expand(r, p, x)) return false;
    }
    return true;
  }

 private:
  std::size_t common(const Bits& a, const Bits& b) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_; ++k) c += static_cast<std::size_t>(__builtin_popcountll(a[k] & b[k]));
    return c;
  }

  bool expand(Set& r, Bits& p, Bits& x) {
    if (!any(p)) {
      if (!any(x)) {
        Set clique = r;
        std::sort(clique.begin(), clique.end());
        out_->push_back(std::move(clique));
        if (out_->size() > limit_) return false;
      }
      return true;
    }
    std::size_t pivot = 0, best = 0;
    bool first = true;
    for (const Bits* s : {&p, &x})
      for (std::size_t k = 0; k < words_; ++k)
        for (Word w = (*s)[k]; w; w &= w - 1) {
          std::size_t u = k * 64 + static_cast<std::size_t>(__builtin_ctzll(w));
          std::size_t c = common(p, adj_[u]);
          if (first || c > best) {
            first = false;
            best = c;
            pivot = u;
          }
        }
    Bits candidates(words_);
    for (std::size_t k = 0; k < words_; ++k) candidates[k] = p[k] & ~adj_[pivot][k];
    Bits np(words_), nx(words_);
    for (std::size_t k = 0; k < words_; ++k)
      for (Word w = candidates[k]; w; w &= w - 1) {
        std::size_t u = k * 64 + static_cast<std::size_t>(__builtin_ctzll(w));
        for (std::size_t i = 0; i < words_; ++i) {
          np[i] = p[i] & adj_[u][i];
          nx[i] = x[i] & adj_[u][i];
        }
        r.push_back(ids_[u]);
        bool ok = expand(r, np, nx);
        r.pop_back();
        if (!ok) return false;
        p[k] &= ~(Word{1} << (u % 64));
        x[k] |= Word{1} << (u % 64);
      }
    return true;
  }

  std::vector<VertexId> degeneracy_order() const {
    int n = g_.size();
    std::vector<int> deg(static_cast<std::size_t>(n));
    int max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
      deg[static_cast<std::size_t>(v)] = g_.degree(v);
      max_deg = std::max(max_deg, deg[static_cast<std::size_t>(v)]);
    }
    std::vector<std::vector<VertexId>> buckets(static_cast<std::size_t>(max_deg) + 1);
    for (VertexId v = 0; v < n; ++v) buckets[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(n));
    std::size_t lowest = 0;
    while (order.size() < static_cast<std::size_t>(n)) {
      while (lowest < buckets.size() && buckets[lowest].empty()) ++lowest;
      VertexId v = buckets[lowest].back();
      buckets[lowest].pop_back();
      if (removed[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] != static_cast<int>(lowest)) continue;
      removed[static_cast<std::size_t>(v)] = 1;
      order.push_back(v);
      for (VertexId w : g_.neighbors(v)) {
        auto& d = deg[static_cast<std::size_t>(w)];
        if (!removed[static_cast<std::size_t>(w)]) {
          --d;
          buckets[static_cast<std::size_t>(d)].push_back(w);
          lowest = std::min(lowest, static_cast<std::size_t>(d));
        }
      }
    }
    return order;
  }

  const Graph& g_;
  std::size_t limit_;
  std::vector<Set>* out_ = nullptr;
  std::vector<int> local_;
  Set ids_;
  std::size_t words_ = 0;
  std::vector<Bits> adj_;
};

}  // namespace

std::optional<std::vector<std::vector<VertexId>>> maximal_cliques(const Graph& g, std::size_t limit) {
  std::vector<Set> out;
  Enumerator e(g, limit);
  if (!e.run(out)) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

CliqueStructure enumerate_maximal_cliques(const Graph& g) {
  auto found = maximal_cliques(g, static_cast<std::size_t>(g.size()));
  if (!found)
    throw Error(ErrorKind::NotHellyCandidate,
                "graph has more than " + std::to_string(g.size()) + " maximal cliques");
  CliqueStructure cs;
  cs.cliques = std::move(*found);
  cs.membership.assign(static_cast<std::size_t>(g.size()), {});
  for (std::size_t c = 0; c < cs.cliques.size(); ++c)
    for (VertexId v : cs.cliques[c]) cs.membership[static_cast<std::size_t>(v)].push_back(static_cast<CliqueId>(c));
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.is_universal(v)) cs.universal_vertices.push_back(v);
  cs.universal_pairs = universal_pairs(g);
  return cs;
}

std::vector<std::pair<VertexId, VertexId>> universal_pairs(const Graph& g) {
  const int n = g.size();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
  for (VertexId v = 0; v < n; ++v) {
    auto& row = rows[static_cast<std::size_t>(v)];
    row[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    for (VertexId w : g.neighbors(v)) row[static_cast<std::size_t>(w) / 64] |= std::uint64_t{1} << (w % 64);
  }
  std::vector<std::uint64_t> full(words, ~std::uint64_t{0});
  if (n % 64 != 0 && words > 0) full.back() = (std::uint64_t{1} << (n % 64)) - 1;
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.neighbors(u)) {
      if (w <= u) continue;
      const auto& a = rows[static_cast<std::size_t>(u)];
      const auto& b = rows[static_cast<std::size_t>(w)];
      bool covers = true;
      for (std::size_t i = 0; i < words && covers; ++i) covers = (a[i] | b[i]) == full[i];
      if (covers) out.emplace_back(u, w);
    }
  }
  return out;
}

bool gavril_check(const CliqueStructure& cs, const std::vector<CliqueId>& order) {
  for (const auto& m : cs.membership)
    if (!cyclically_consecutive(order, m)) return false;
  return true;
}

}  // namespace arcx

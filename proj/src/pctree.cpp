#include "arcx/pctree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

#include "arcx/errors.hpp"
#include "pq_engine.hpp"

namespace arcx {

struct PCTree::Rooted {
  int root = -1;
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<std::vector<int>> children;
  std::vector<int> preorder;
};

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap;
  return std::min(cap, a * b);
}

}  // namespace

int PCTree::index_of(int element) const {
  auto it = std::find(labels_.begin(), labels_.end(), element);
  if (it == labels_.end()) throw Error(ErrorKind::InvalidInput, "element " + std::to_string(element) + " not a leaf");
  return static_cast<int>(it - labels_.begin());
}

std::optional<PCTree> PCTree::build(const std::vector<int>& ground, const std::vector<std::vector<int>>& constraints) {
  const int n = static_cast<int>(ground.size());
  std::unordered_map<int, int> index;
  index.reserve(ground.size());
  for (int i = 0; i < n; ++i)
    if (!index.emplace(ground[static_cast<std::size_t>(i)], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate ground element");

  PCTree t;
  t.labels_ = ground;
  t.kind_.assign(static_cast<std::size_t>(n), Kind::Leaf);
  t.adj_.assign(static_cast<std::size_t>(n), {});

  std::vector<std::vector<int>> sets;
  sets.reserve(constraints.size());
  for (const auto& x : constraints) {
    std::vector<int> ids;
    ids.reserve(x.size());
    for (int e : x) {
      auto it = index.find(e);
      if (it == index.end()) throw Error(ErrorKind::InvalidInput, "constraint element not in ground set");
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    sets.push_back(std::move(ids));
  }

  if (n <= 3) {
    if (n == 2) {
      t.adj_[0] = {1};
      t.adj_[1] = {0};
    } else if (n == 3) {
      t.kind_.push_back(Kind::P);
      t.adj_.push_back({0, 1, 2});
      for (int i = 0; i < 3; ++i) t.adj_[static_cast<std::size_t>(i)] = {3};
    }
    return t;
  }

  // Rooted at leaf 0: a set containing it is replaced by its complement.
  detail::PQEngine engine(n - 1);
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  std::vector<int> leaves;
  for (const auto& ids : sets) {
    leaves.clear();
    if (!ids.empty() && ids[0] == 0) {
      for (int i : ids) in_set[static_cast<std::size_t>(i)] = 1;
      for (int i = 1; i < n; ++i)
        if (!in_set[static_cast<std::size_t>(i)]) leaves.push_back(i - 1);
      for (int i : ids) in_set[static_cast<std::size_t>(i)] = 0;
    } else {
      for (int i : ids) leaves.push_back(i - 1);
    }
    if (!engine.reduce(leaves)) return std::nullopt;
  }

  // Export: engine leaf i is ground index i+1; internal nodes get fresh ids.
  std::vector<std::pair<int, int>> stack{{engine.root(), 0}};
  while (!stack.empty()) {
    auto [e, parent_id] = stack.back();
    stack.pop_back();
    if (engine.kind(e) == detail::PQEngine::Kind::Leaf) {
      int id = e + 1;
      t.adj_[static_cast<std::size_t>(id)].insert(t.adj_[static_cast<std::size_t>(id)].begin(), parent_id);
      t.adj_[static_cast<std::size_t>(parent_id)].push_back(id);
      continue;
    }
    std::vector<int> ch = engine.children(e);
    int id = static_cast<int>(t.kind_.size());
    bool cyclic = engine.kind(e) == detail::PQEngine::Kind::Q && ch.size() >= 3;
    t.kind_.push_back(cyclic ? Kind::C : Kind::P);
    t.adj_.push_back({parent_id});
    t.adj_[static_cast<std::size_t>(parent_id)].push_back(id);
    // Children are pushed in reverse so they are attached in sibling order.
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, id);
  }
  return t;
}

PCTree::Rooted PCTree::rooted_at(int leaf_index) const {
  Rooted r;
  const std::size_t m = kind_.size();
  r.root = leaf_index;
  r.parent.assign(m, -1);
  r.depth.assign(m, 0);
  r.children.assign(m, {});
  std::vector<int> stack{leaf_index};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    r.preorder.push_back(v);
    const auto& nb = adj_[static_cast<std::size_t>(v)];
    int p = r.parent[static_cast<std::size_t>(v)];
    auto& ch = r.children[static_cast<std::size_t>(v)];
    if (p < 0) {
      ch = nb;
    } else {
      auto pos = std::find(nb.begin(), nb.end(), p);
      ch.assign(pos + 1, nb.end());
      ch.insert(ch.end(), nb.begin(), pos);
    }
    for (int c : ch) {
      r.parent[static_cast<std::size_t>(c)] = v;
      r.depth[static_cast<std::size_t>(c)] = r.depth[static_cast<std::size_t>(v)] + 1;
    }
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return r;
}

std::size_t PCTree::order_count(std::size_t cap) const {
  if (labels_.size() <= 2) return std::min<std::size_t>(1, cap);
  std::size_t total = 1;
  for (std::size_t v = labels_.size(); v < kind_.size(); ++v) {
    std::size_t children = adj_[v].size() - 1;
    if (kind_[v] == Kind::C) {
      total = saturating_mul(total, 2, cap);
    } else {
      for (std::size_t k = 2; k <= children; ++k) total = saturating_mul(total, k, cap);
    }
  }
  return total;
}

std::vector<CyclicOrder> PCTree::enumerate_orders(std::size_t limit) const {
  std::size_t count = order_count(limit == static_cast<std::size_t>(-1) ? limit : limit + 1);
  if (count > limit)
    throw Error(ErrorKind::LimitExceeded, "tree represents more than " + std::to_string(limit) + " orders");
  if (labels_.empty()) return {};
  Rooted r = rooted_at(0);

  using Seqs = std::vector<std::vector<int>>;
  std::function<Seqs(int)> expand = [&](int v) -> Seqs {
    if (kind_[static_cast<std::size_t>(v)] == Kind::Leaf && v != r.root) return {{labels_[static_cast<std::size_t>(v)]}};
    const auto& ch = r.children[static_cast<std::size_t>(v)];
    std::vector<Seqs> parts;
    for (int c : ch) parts.push_back(expand(c));
    std::vector<std::vector<std::size_t>> arrangements;
    std::vector<std::size_t> perm(ch.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    if (kind_[static_cast<std::size_t>(v)] == Kind::C) {
      arrangements.push_back(perm);
      std::reverse(perm.begin(), perm.end());
      arrangements.push_back(perm);
    } else if (v == r.root) {
      arrangements.push_back(perm);
    } else {
      do arrangements.push_back(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
    }
    Seqs out;
    for (const auto& arr : arrangements) {
      Seqs acc{{}};
      for (std::size_t idx : arr) {
        Seqs next;
        for (const auto& prefix : acc)
          for (const auto& s : parts[idx]) {
            auto joined = prefix;
            joined.insert(joined.end(), s.begin(), s.end());
            next.push_back(std::move(joined));
          }
        acc = std::move(next);
      }
      out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
  };

  std::vector<CyclicOrder> result;
  for (auto& seq : expand(r.root)) {
    seq.insert(seq.begin(), labels_[0]);
    result.emplace_back(std::move(seq));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::optional<LinearOrder> PCTree::reorder(int u, const PartialPrec& prec) const {
  if (has_cycle(prec)) throw Error(ErrorKind::CyclicPrec, "precedence relation has a cycle");
  const int ui = index_of(u);
  const int n = static_cast<int>(labels_.size());
  std::unordered_map<int, int> index;
  for (int i = 0; i < n; ++i) index.emplace(labels_[static_cast<std::size_t>(i)], i);

  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : prec) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) throw Error(ErrorKind::InvalidInput, "precedence element not a leaf");
    if (ia->second == ui) continue;
    if (ib->second == ui) return std::nullopt;
    pairs.emplace_back(ia->second, ib->second);
  }

  Rooted r = rooted_at(ui);
  const std::size_t m = kind_.size();
  int levels = 1;
  while ((1u << levels) < m) ++levels;
  std::vector<std::vector<int>> up(static_cast<std::size_t>(levels), std::vector<int>(m));
  for (std::size_t v = 0; v < m; ++v) up[0][v] = r.parent[v] < 0 ? static_cast<int>(v) : r.parent[v];
  for (int k = 1; k < levels; ++k)
    for (std::size_t v = 0; v < m; ++v)
      up[static_cast<std::size_t>(k)][v] = up[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(up[static_cast<std::size_t>(k - 1)][v])];
  auto lift = [&](int v, int steps) {
    for (int k = 0; steps > 0; ++k, steps >>= 1)
      if (steps & 1) v = up[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
    return v;
  };
  auto depth = [&](int v) { return r.depth[static_cast<std::size_t>(v)]; };

  std::vector<int> pos_in_parent(m, 0);
  for (std::size_t v = 0; v < m; ++v) {
    const auto& ch = r.children[v];
    for (std::size_t i = 0; i < ch.size(); ++i) pos_in_parent[static_cast<std::size_t>(ch[i])] = static_cast<int>(i);
  }

  // Each pair becomes an edge between two children of its lowest common ancestor.
  std::vector<std::vector<std::pair<int, int>>> local(m);
  for (auto [a, b] : pairs) {
    int x = a, y = b;
    if (depth(x) > depth(y)) x = lift(x, depth(x) - depth(y));
    if (depth(y) > depth(x)) y = lift(y, depth(y) - depth(x));
    if (x == y) continue;
    for (int k = levels - 1; k >= 0; --k) {
      int ux = up[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
      int uy = up[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)];
      if (ux != uy) {
        x = ux;
        y = uy;
      }
    }
    int lca = r.parent[static_cast<std::size_t>(x)];
    local[static_cast<std::size_t>(lca)].emplace_back(pos_in_parent[static_cast<std::size_t>(x)],
                                                      pos_in_parent[static_cast<std::size_t>(y)]);
  }

  std::vector<std::vector<int>> arranged(m);
  for (std::size_t v = 0; v < m; ++v) {
    const auto& ch = r.children[v];
    const auto& edges = local[v];
    if (ch.empty()) continue;
    if (kind_[v] == Kind::C) {
      bool forward = std::all_of(edges.begin(), edges.end(), [](auto e) { return e.first < e.second; });
      bool backward = std::all_of(edges.begin(), edges.end(), [](auto e) { return e.first > e.second; });
      if (!forward && !backward) return std::nullopt;
      arranged[v] = ch;
      if (!forward) std::reverse(arranged[v].begin(), arranged[v].end());
      continue;
    }
    const std::size_t k = ch.size();
    std::vector<std::vector<int>> out(k);
    std::vector<int> indeg(k, 0);
    for (auto [a, b] : edges) {
      out[static_cast<std::size_t>(a)].push_back(b);
      ++indeg[static_cast<std::size_t>(b)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (std::size_t i = 0; i < k; ++i)
      if (indeg[i] == 0) ready.push(static_cast<int>(i));
    while (!ready.empty()) {
      int i = ready.top();
      ready.pop();
      arranged[v].push_back(ch[static_cast<std::size_t>(i)]);
      for (int j : out[static_cast<std::size_t>(i)])
        if (--indeg[static_cast<std::size_t>(j)] == 0) ready.push(j);
    }
    if (arranged[v].size() != k) return std::nullopt;
  }

  LinearOrder result;
  result.reserve(labels_.size());
  std::vector<int> stack(arranged[static_cast<std::size_t>(ui)].rbegin(), arranged[static_cast<std::size_t>(ui)].rend());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (kind_[static_cast<std::size_t>(v)] == Kind::Leaf) {
      result.push_back(labels_[static_cast<std::size_t>(v)]);
      continue;
    }
    const auto& ch = arranged[static_cast<std::size_t>(v)];
    stack.insert(stack.end(), ch.rbegin(), ch.rend());
  }
  return result;
}

std::string PCTree::serialize() const {
  if (labels_.empty()) return "";
  int start = static_cast<int>(std::min_element(labels_.begin(), labels_.end()) - labels_.begin());
  Rooted r = rooted_at(start);
  const std::size_t m = kind_.size();
  std::vector<int> min_label(m, 0);
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    std::size_t v = static_cast<std::size_t>(*it);
    if (kind_[v] == Kind::Leaf) {
      min_label[v] = labels_[v];
      continue;
    }
    min_label[v] = min_label[static_cast<std::size_t>(r.children[v].front())];
    for (int c : r.children[v]) min_label[v] = std::min(min_label[v], min_label[static_cast<std::size_t>(c)]);
  }
  std::function<std::string(int)> emit = [&](int v) -> std::string {
    std::size_t sv = static_cast<std::size_t>(v);
    if (kind_[sv] == Kind::Leaf) return std::to_string(labels_[sv]);
    std::vector<int> ch = r.children[sv];
    auto key = [&](int c) { return min_label[static_cast<std::size_t>(c)]; };
    if (kind_[sv] == Kind::P) {
      std::sort(ch.begin(), ch.end(), [&](int a, int b) { return key(a) < key(b); });
    } else if (key(ch.front()) > key(ch.back())) {
      std::reverse(ch.begin(), ch.end());
    }
    std::string s = kind_[sv] == Kind::P ? "P(" : "C(";
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i) s += ' ';
      s += emit(ch[i]);
    }
    return s + ")";
  };
  std::string out = std::to_string(labels_[static_cast<std::size_t>(start)]);
  for (int c : r.children[static_cast<std::size_t>(start)]) out += " " + emit(c);
  return out;
}

bool satisfies_constraints(const CyclicOrder& order, const std::vector<std::vector<int>>& constraints) {
  for (const auto& x : constraints)
    if (!cyclically_consecutive(order.sequence(), x)) return false;
  return true;
}

bool extends_prec(const LinearOrder& order, const PartialPrec& prec) {
  std::unordered_map<int, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (auto [a, b] : prec) {
    auto ia = pos.find(a), ib = pos.find(b);
    if (ia == pos.end() || ib == pos.end()) continue;
    if (ia->second >= ib->second) return false;
  }
  return true;
}

bool has_cycle(const PartialPrec& prec) {
  std::map<int, std::vector<int>> out;
  std::map<int, int> indeg;
  for (auto [a, b] : prec) {
    if (a == b) return true;
    out[a].push_back(b);
    indeg.try_emplace(a, 0);
    ++indeg[b];
  }
  std::vector<int> ready;
  for (auto [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen != indeg.size();
}

}  // namespace arcx

namespace arcx {

std::vector<LinearOrder> PCTree::enumerate_matching(int anchor, const LinearOrder& target, std::size_t limit) const {
  Rooted r = rooted_at(index_of(anchor));
  std::unordered_map<int, int> rank;
  for (std::size_t i = 0; i < target.size(); ++i) rank.emplace(target[i], static_cast<int>(i));

  // A subtree's target elements must form a run rank[first]..rank[last] in order.
  struct Part {
    LinearOrder seq;
    int first = -1;
    int last = -1;
  };
  using Parts = std::vector<Part>;
  auto too_many = [&] {
    throw Error(ErrorKind::LimitExceeded, "more than " + std::to_string(limit) + " matching sequences");
  };

  std::function<Parts(int)> expand = [&](int v) -> Parts {
    if (kind_[static_cast<std::size_t>(v)] == Kind::Leaf && v != r.root) {
      int e = labels_[static_cast<std::size_t>(v)];
      auto it = rank.find(e);
      int k = it == rank.end() ? -1 : it->second;
      return {Part{{e}, k, k}};
    }
    const auto& ch = r.children[static_cast<std::size_t>(v)];
    std::vector<Parts> parts;
    for (int c : ch) {
      parts.push_back(expand(c));
      if (parts.back().empty()) return {};
    }
    Parts out;
    Part cur;
    std::vector<char> used(ch.size(), 0);
    auto join = [&](std::size_t idx, auto&& next) {
      for (const Part& p : parts[idx]) {
        if (p.first >= 0 && cur.last >= 0 && p.first != cur.last + 1) continue;
        Part saved = cur;
        cur.seq.insert(cur.seq.end(), p.seq.begin(), p.seq.end());
        if (p.first >= 0) {
          if (cur.first < 0) cur.first = p.first;
          cur.last = p.last;
        }
        next();
        cur = std::move(saved);
      }
    };
    auto emit = [&] {
      out.push_back(cur);
      if (out.size() > limit) too_many();
    };
    if (kind_[static_cast<std::size_t>(v)] == Kind::C || v == r.root) {
      std::vector<std::vector<std::size_t>> arrangements(1);
      for (std::size_t i = 0; i < ch.size(); ++i) arrangements[0].push_back(i);
      if (v != r.root) arrangements.emplace_back(arrangements[0].rbegin(), arrangements[0].rend());
      for (const auto& arr : arrangements) {
        std::function<void(std::size_t)> step = [&](std::size_t pos) {
          if (pos == arr.size()) return emit();
          join(arr[pos], [&] { step(pos + 1); });
        };
        step(0);
      }
    } else {
      std::function<void(std::size_t)> step = [&](std::size_t placed) {
        if (placed == ch.size()) return emit();
        for (std::size_t i = 0; i < ch.size(); ++i) {
          if (used[i]) continue;
          used[i] = 1;
          join(i, [&] { step(placed + 1); });
          used[i] = 0;
        }
      };
      step(0);
    }
    return out;
  };

  std::vector<LinearOrder> result;
  const int k = static_cast<int>(target.size());
  for (Part& p : expand(r.root))
    if (k == 0 || (p.first == 0 && p.last == k - 1)) result.push_back(std::move(p.seq));
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace arcx

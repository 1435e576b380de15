#include "pq_engine.hpp"

#include <numeric>
#include <utility>

namespace arcx::detail {

PQEngine::PQEngine(int leaves) : leaves_(leaves) {
  nodes_.resize(static_cast<std::size_t>(leaves));
  dsu_.resize(static_cast<std::size_t>(leaves));
  std::iota(dsu_.begin(), dsu_.end(), 0);
  if (leaves == 1) root_ = 0;
  if (leaves >= 2) {
    root_ = new_node(Kind::P);
    for (int i = 0; i < leaves; ++i) append_child(root_, i);
  }
}

int PQEngine::find(int id) {
  int r = id;
  while (dsu_[static_cast<std::size_t>(r)] != r) r = dsu_[static_cast<std::size_t>(r)];
  while (dsu_[static_cast<std::size_t>(id)] != r) {
    int next = dsu_[static_cast<std::size_t>(id)];
    dsu_[static_cast<std::size_t>(id)] = r;
    id = next;
  }
  return r;
}

int PQEngine::parent_of(int id) {
  int p = at(id).parent;
  return p < 0 ? -1 : find(p);
}

int PQEngine::new_node(Kind kind) {
  int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_.back().kind = kind;
  dsu_.push_back(id);
  return id;
}

void PQEngine::touch(int id) {
  Node& n = at(id);
  n.epoch = epoch_;
  n.label = Label::Empty;
  n.full_side = 0;
  n.result = id;
  n.pert.clear();
}

void PQEngine::replace_sib(int node, int old_id, int new_id) {
  if (node < 0) return;
  Node& n = at(node);
  if (n.sib[0] == old_id)
    n.sib[0] = new_id;
  else if (n.sib[1] == old_id)
    n.sib[1] = new_id;
}

void PQEngine::append_child(int parent, int child) { add_at_end(parent, 1, child); }

void PQEngine::add_at_end(int q, int side, int child) {
  at(child).parent = q;
  if (at(q).count == 0) {
    at(q).end[0] = at(q).end[1] = child;
    at(child).sib[0] = at(child).sib[1] = -1;
  } else {
    int last = at(q).end[side];
    replace_sib(last, -1, child);
    at(child).sib[0] = last;
    at(child).sib[1] = -1;
    at(q).end[side] = child;
  }
  ++at(q).count;
}

void PQEngine::remove_child(int parent, int child) {
  int a = at(child).sib[0], b = at(child).sib[1];
  replace_sib(a, child, b);
  replace_sib(b, child, a);
  for (int& e : at(parent).end)
    if (e == child) e = (a == -1 ? b : a);
  at(child).sib[0] = at(child).sib[1] = -1;
  at(child).parent = -1;
  --at(parent).count;
}

void PQEngine::replace_node(int old_id, int new_id) {
  int p = parent_of(old_id);
  Node& o = at(old_id);
  Node& n = at(new_id);
  n.parent = o.parent;
  n.sib[0] = o.sib[0];
  n.sib[1] = o.sib[1];
  replace_sib(o.sib[0], old_id, new_id);
  replace_sib(o.sib[1], old_id, new_id);
  if (p < 0) {
    root_ = new_id;
  } else {
    for (int& e : at(p).end)
      if (e == old_id) e = new_id;
  }
}

int PQEngine::take_single(int p) {
  int c = at(p).end[0];
  remove_child(p, c);
  return c;
}

int PQEngine::gather_full(int x, const std::vector<int>& full) {
  if (full.size() == 1) {
    remove_child(x, full[0]);
    return full[0];
  }
  int p = new_node(Kind::P);
  touch(p);
  at(p).label = Label::Full;
  for (int c : full) {
    remove_child(x, c);
    append_child(p, c);
  }
  return p;
}

void PQEngine::splice(int x, int p, int inner, int outer) {
  int fs = at(p).full_side;
  int a = at(p).end[fs], b = at(p).end[1 - fs];
  replace_sib(inner, p, a);
  replace_sib(outer, p, b);
  replace_sib(a, -1, inner);
  replace_sib(b, -1, outer);
  for (int& e : at(x).end)
    if (e == p) e = (inner == -1 ? a : b);
  at(x).count += at(p).count - 1;
  dsu_[static_cast<std::size_t>(p)] = x;
}

bool PQEngine::process_p(int x, bool is_root) {
  std::vector<int> full, partial;
  for (int c : at(x).pert) (label_of(c) == Label::Full ? full : partial).push_back(c);
  if (partial.empty() && static_cast<int>(full.size()) == at(x).count) {
    at(x).label = Label::Full;
    return true;
  }
  if (!is_root) {
    if (partial.size() > 1) return false;
    if (partial.empty()) {
      int f = gather_full(x, full);
      int q = new_node(Kind::Q);
      touch(q);
      replace_node(x, q);
      int e = at(x).count == 1 ? take_single(x) : x;
      append_child(q, e);
      append_child(q, f);
      at(q).label = Label::Partial;
      at(q).full_side = 1;
      at(x).result = q;
      return true;
    }
    int y = partial[0];
    remove_child(x, y);
    int f = full.empty() ? -1 : gather_full(x, full);
    replace_node(x, y);
    int fs = at(y).full_side;
    if (f >= 0) add_at_end(y, fs, f);
    if (at(x).count > 0) {
      int e = at(x).count == 1 ? take_single(x) : x;
      add_at_end(y, 1 - fs, e);
    }
    at(x).result = y;
    return true;
  }

  if (partial.size() > 2) return false;
  if (partial.empty()) {
    append_child(x, gather_full(x, full));
    return true;
  }
  int y = partial[0];
  int fs = at(y).full_side;
  if (!full.empty()) add_at_end(y, fs, gather_full(x, full));
  if (partial.size() == 2) {
    int z = partial[1];
    int zs = at(z).full_side;
    remove_child(x, z);
    int a = at(y).end[fs], b = at(z).end[zs];
    replace_sib(a, -1, b);
    replace_sib(b, -1, a);
    at(y).end[fs] = at(z).end[1 - zs];
    at(y).count += at(z).count;
    dsu_[static_cast<std::size_t>(z)] = y;
  }
  if (at(x).count == 1) {
    remove_child(x, y);
    replace_node(x, y);
    at(x).result = y;
  }
  return true;
}

bool PQEngine::process_q(int x, bool is_root) {
  const std::vector<int> pert = at(x).pert;
  std::vector<int> partial;
  int full = 0;
  for (int c : pert) {
    if (label_of(c) == Label::Full)
      ++full;
    else
      partial.push_back(c);
  }
  if (partial.empty() && full == at(x).count) {
    at(x).label = Label::Full;
    return true;
  }

  // The pertinent children must form one run of siblings.
  int s = pert[0];
  int run_end[2], beyond[2];
  int total = 1;
  for (int d = 0; d < 2; ++d) {
    int prev = s, cur = at(s).sib[d];
    while (cur != -1 && label_of(cur) != Label::Empty) {
      ++total;
      int nx = next_sibling(at(cur), prev);
      prev = cur;
      cur = nx;
    }
    run_end[d] = prev;
    beyond[d] = cur;
  }
  if (total != static_cast<int>(pert.size())) return false;
  for (int p : partial)
    if (p != run_end[0] && p != run_end[1]) return false;

  if (!is_root) {
    if (partial.size() > 1) return false;
    int outer = -1;
    for (int d = 0; d < 2 && outer < 0; ++d)
      if (beyond[d] == -1 && (partial.empty() || partial[0] == run_end[1 - d])) outer = d;
    if (outer < 0) return false;
    int final_end = run_end[outer];
    if (!partial.empty()) {
      int p = partial[0];
      int out = beyond[1 - outer];
      int in = at(p).sib[0] == out ? at(p).sib[1] : at(p).sib[0];
      if (final_end == p) final_end = at(p).end[at(p).full_side];
      splice(x, p, in, out);
    }
    at(x).label = Label::Partial;
    at(x).full_side = at(x).end[0] == final_end ? 0 : 1;
    return true;
  }

  for (int p : partial) {
    int out = beyond[p == run_end[0] ? 0 : 1];
    int in = at(p).sib[0] == out ? at(p).sib[1] : at(p).sib[0];
    splice(x, p, in, out);
  }
  return true;
}

bool PQEngine::reduce(const std::vector<int>& leaf_set) {
  if (leaf_set.size() <= 1 || static_cast<int>(leaf_set.size()) >= leaves_) return true;
  ++epoch_;
  for (int l : leaf_set) {
    touch(l);
    at(l).label = Label::Full;
  }
  for (int l : leaf_set) {
    int cur = l;
    while (true) {
      int p = parent_of(cur);
      if (p < 0) break;
      bool first = !touched(p);
      if (first) touch(p);
      at(p).pert.push_back(cur);
      if (!first) break;
      cur = p;
    }
  }

  int pert_root = root_;
  while (at(pert_root).kind != Kind::Leaf && at(pert_root).pert.size() == 1) pert_root = at(pert_root).pert[0];

  std::vector<int> order;
  std::vector<std::pair<int, std::size_t>> stack{{pert_root, 0}};
  while (!stack.empty()) {
    auto [v, i] = stack.back();
    if (i < at(v).pert.size()) {
      stack.back().second = i + 1;
      stack.emplace_back(at(v).pert[i], 0);
    } else {
      order.push_back(v);
      stack.pop_back();
    }
  }

  for (int v : order) {
    if (at(v).kind == Kind::Leaf) continue;
    for (int& c : at(v).pert) c = at(c).result;
    bool ok = at(v).kind == Kind::P ? process_p(v, v == pert_root) : process_q(v, v == pert_root);
    if (!ok) return false;
  }
  return true;
}

std::vector<int> PQEngine::children(int node) const {
  std::vector<int> out;
  int prev = -1, cur = at(node).end[0];
  while (cur != -1) {
    out.push_back(cur);
    int nx = next_sibling(at(cur), prev);
    prev = cur;
    cur = nx;
  }
  return out;
}

}  // namespace arcx::detail

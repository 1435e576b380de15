#include "arcx/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "arcx/errors.hpp"

namespace arcx {

namespace {

struct Layout {
  long n, t, u_count, v_first, w_first, z_first, total;
};

Layout layout(const ThreePartitionInstance& inst) {
  Layout l{inst.n, inst.t, 0, 0, 0, 0, 0};
  l.u_count = (l.t + 1) * l.n;
  l.v_first = l.u_count;
  l.w_first = l.v_first + l.n;
  l.z_first = l.w_first + l.t * l.n;
  l.total = l.z_first + static_cast<long>(inst.s.size());
  return l;
}

Gadget hca_graph(const ThreePartitionInstance& inst, bool relaxed) {
  validate(inst, relaxed);
  const Layout l = layout(inst);
  Gadget g;
  g.graph = Graph(static_cast<int>(l.total));
  for (long i = 0; i < l.u_count; ++i) {
    g.names.push_back("u" + std::to_string(i + 1));
    for (long x = 0; x < l.total; ++x)
      if (x != i) g.graph.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(x));
  }
  for (long i = 0; i < l.n; ++i) g.names.push_back("v" + std::to_string(i + 1));
  for (long i = 0; i < l.t * l.n; ++i) g.names.push_back("w" + std::to_string(i + 1));
  long next_w = 0;
  for (std::size_t i = 0; i < inst.s.size(); ++i) {
    g.names.push_back("z" + std::to_string(i + 1));
    VertexId z = static_cast<VertexId>(l.z_first + static_cast<long>(i));
    for (long k = 0; k < inst.s[i]; ++k) g.graph.add_edge(z, static_cast<VertexId>(l.w_first + next_w++));
  }
  return g;
}

/// p_j = j / ((t+1) n), indices taken cyclically.
CirclePoint grid(const Layout& l, long j) { return CirclePoint(ratio(j, l.u_count)); }

}  // namespace

void validate(const ThreePartitionInstance& inst, bool relaxed) {
  if (inst.n < 1 || inst.t < 1) throw Error(ErrorKind::InvalidInstance, "n and t must be positive");
  long sum = 0;
  for (long x : inst.s) {
    if (x < 1) throw Error(ErrorKind::InvalidInstance, "elements must be positive");
    sum += x;
  }
  if (sum != inst.n * inst.t)
    throw Error(ErrorKind::InvalidInstance, "elements sum to " + std::to_string(sum) + ", expected n*t = " +
                                                std::to_string(inst.n * inst.t));
  if (relaxed) return;
  if (inst.s.size() != 3 * static_cast<std::size_t>(inst.n))
    throw Error(ErrorKind::InvalidInstance, "expected 3n elements");
  for (long x : inst.s)
    if (!(inst.t < 4 * x && 2 * x < inst.t))
      throw Error(ErrorKind::InvalidInstance, "element " + std::to_string(x) + " lies outside (t/4, t/2)");
}

Gadget gen_hca_gadget(const ThreePartitionInstance& inst, bool relaxed) {
  Gadget g = hca_graph(inst, relaxed);
  const Layout l = layout(inst);
  for (long i = 1; i <= l.u_count; ++i)
    g.partial.set(static_cast<VertexId>(i - 1), Arc(grid(l, i), grid(l, i - 1)));
  for (long i = 1; i <= l.n; ++i) {
    CirclePoint p = grid(l, (l.t + 1) * i);
    g.partial.set(static_cast<VertexId>(l.v_first + i - 1), Arc(p, p));
  }
  return g;
}

Gadget gen_ca_distinct_gadget(const ThreePartitionInstance& inst, bool relaxed) {
  Gadget g = hca_graph(inst, relaxed);
  const Layout l = layout(inst);
  const Rational gap = ratio(1, l.u_count);
  for (long i = 1; i <= l.u_count; ++i)
    g.partial.set(static_cast<VertexId>(i - 1), Arc(CirclePoint(grid(l, i).pos() + gap / 5), grid(l, i - 1)));
  for (long i = 1; i <= l.n; ++i) {
    const Rational p = grid(l, (l.t + 1) * i).pos();
    g.partial.set(static_cast<VertexId>(l.v_first + i - 1), Arc(CirclePoint(p - gap / 3), CirclePoint(p + gap / 3)));
  }
  return g;
}

Gadget gen_uca_gadget(const ThreePartitionInstance& inst, bool relaxed) {
  if (inst.t < 8) throw Error(ErrorKind::TTooSmall, "the unit gadget needs t >= 8");
  validate(inst, relaxed);
  const long units = inst.n * (inst.t + 2);
  long total = inst.n;
  for (long x : inst.s) total += 2 * x;
  Gadget g;
  g.graph = Graph(static_cast<int>(total));
  for (long j = 0; j < inst.n; ++j) {
    g.names.push_back("v" + std::to_string(j));
    g.partial.set(static_cast<VertexId>(j),
                  Arc(CirclePoint(ratio(j * (inst.t + 2), units)), CirclePoint(ratio(j * (inst.t + 2) + 1, units))));
  }
  VertexId next = static_cast<VertexId>(inst.n);
  for (std::size_t i = 0; i < inst.s.size(); ++i)
    for (long k = 0; k < 2 * inst.s[i]; ++k, ++next) {
      g.names.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
      if (k > 0) g.graph.add_edge(next - 1, next);
    }
  return g;
}

void validate_partition(const ThreePartitionInstance& inst, const Partition& partition) {
  if (partition.size() != static_cast<std::size_t>(inst.n))
    throw Error(ErrorKind::InvalidPartition, "expected " + std::to_string(inst.n) + " groups");
  std::vector<int> used(inst.s.size(), 0);
  for (const auto& group : partition) {
    long sum = 0;
    for (int i : group) {
      if (i < 0 || static_cast<std::size_t>(i) >= inst.s.size() || used[static_cast<std::size_t>(i)]++)
        throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(i) + " is out of range or repeated");
      sum += inst.s[static_cast<std::size_t>(i)];
    }
    if (sum != inst.t) throw Error(ErrorKind::InvalidPartition, "a group sums to " + std::to_string(sum));
  }
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw Error(ErrorKind::InvalidPartition, "some element is in no group");
}

Representation partition_to_extension(const ThreePartitionInstance& inst, const Partition& partition, bool relaxed) {
  Gadget g = gen_hca_gadget(inst, relaxed);
  validate_partition(inst, partition);
  const Layout l = layout(inst);
  const Rational half = ratio(1, 4 * l.u_count);
  std::vector<Arc> arcs(static_cast<std::size_t>(l.total));
  for (const auto& [v, a] : g.partial) arcs[static_cast<std::size_t>(v)] = a;

  // w vertices of z_i, in order
  std::vector<long> first_w(inst.s.size());
  for (std::size_t i = 0, next = 0; i < inst.s.size(); next += static_cast<std::size_t>(inst.s[i]), ++i)
    first_w[i] = static_cast<long>(next);

  for (long slot = 0; slot < l.n; ++slot) {
    long point = (l.t + 1) * slot + 1;
    for (int i : partition[static_cast<std::size_t>(slot)]) {
      const long s = inst.s[static_cast<std::size_t>(i)];
      arcs[static_cast<std::size_t>(l.z_first + i)] = Arc(grid(l, point), grid(l, point + s - 1));
      for (long k = 0; k < s; ++k) {
        const Rational p = grid(l, point + k).pos();
        arcs[static_cast<std::size_t>(l.w_first + first_w[static_cast<std::size_t>(i)] + k)] =
            Arc(CirclePoint(p - half), CirclePoint(p + half));
      }
      point += s;
    }
  }
  return Representation(std::move(arcs));
}

std::optional<Partition> find_partition(const ThreePartitionInstance& inst) {
  Partition groups(static_cast<std::size_t>(inst.n));
  std::vector<long> load(static_cast<std::size_t>(inst.n), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == inst.s.size()) return std::all_of(load.begin(), load.end(), [&](long x) { return x == inst.t; });
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (load[g] + inst.s[i] > inst.t) continue;
      load[g] += inst.s[i];
      groups[g].push_back(static_cast<int>(i));
      if (place(i + 1)) return true;
      groups[g].pop_back();
      load[g] -= inst.s[i];
      if (load[g] == 0) break;  // empty groups are interchangeable
    }
    return false;
  };
  if (place(0)) return groups;
  return std::nullopt;
}

}  // namespace arcx

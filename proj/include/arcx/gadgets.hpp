// Instances built from 3-Partition: the Helly and distinct-endpoint gadgets and the
// unit gadget, plus the constructive direction for the Helly gadget.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcx/core.hpp"

namespace arcx {

struct ThreePartitionInstance {
  std::vector<long> s;
  long t = 0;
  int n = 0;
};

/// Throws Error(InvalidInstance). `relaxed` keeps only positivity and the total n*t,
/// dropping both the size window t/4 < s_i < t/2 and the 3n count.
void validate(const ThreePartitionInstance& inst, bool relaxed);

struct Gadget {
  Graph graph;
  PartialRepresentation partial;
  std::vector<std::string> names;
};

/// Vertex ids: u_1..u_{(t+1)n}, then v_1..v_n, w_1..w_{tn}, z_1..z_{3n}, in that order.
Gadget gen_hca_gadget(const ThreePartitionInstance& inst, bool relaxed = false);
/// Same graph; universal tails pulled back by a fifth of the point gap and v-arcs
/// widened by a third of it, so every predrawn endpoint is distinct.
Gadget gen_ca_distinct_gadget(const ThreePartitionInstance& inst, bool relaxed = false);
/// Vertex ids: v_0..v_{n-1}, then the paths P_{2 s_i} in order. Throws Error(TTooSmall) for t < 8.
Gadget gen_uca_gadget(const ThreePartitionInstance& inst, bool relaxed = false);

/// Groups of indices into s, one group per slot.
using Partition = std::vector<std::vector<int>>;

/// Throws Error(InvalidPartition) unless the groups use every index once, there are
/// n of them and each sums to t.
void validate_partition(const ThreePartitionInstance& inst, const Partition& partition);

/// Full representation of gen_hca_gadget(inst) extending its predrawn arcs.
Representation partition_to_extension(const ThreePartitionInstance& inst, const Partition& partition,
                                      bool relaxed = false);

/// Exhaustive search for a partition; only meant for tiny instances.
std::optional<Partition> find_partition(const ThreePartitionInstance& inst);

}  // namespace arcx

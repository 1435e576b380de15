// Rooted PQ-tree with template reductions over leaves 0..n-1.
// Q-node children carry undirected sibling links, so a child list can be spliced
// into its parent in either orientation in O(1); children of merged Q-nodes find
// their new parent through a union-find over node ids.
#pragma once

#include <cstdint>
#include <vector>

namespace arcx::detail {

class PQEngine {
 public:
  enum class Kind : std::uint8_t { Leaf, P, Q };

  explicit PQEngine(int leaves);

  /// Restricts the tree to orders where `leaf_set` is consecutive. Returns false on
  /// failure, after which the tree is unusable.
  bool reduce(const std::vector<int>& leaf_set);

  int root() const { return root_; }
  Kind kind(int node) const { return nodes_[static_cast<std::size_t>(node)].kind; }
  /// Children in sibling order (arbitrary but fixed for P-nodes).
  std::vector<int> children(int node) const;
  int leaf_count() const { return leaves_; }

 private:
  enum class Label : std::uint8_t { Empty, Full, Partial };

  struct Node {
    Kind kind = Kind::Leaf;
    int parent = -1;
    int sib[2] = {-1, -1};
    int end[2] = {-1, -1};
    int count = 0;
    // Reduction scratch, valid while epoch matches.
    unsigned epoch = 0;
    Label label = Label::Empty;
    int full_side = 0;
    int result = -1;
    std::vector<int> pert;
  };

  Node& at(int id) { return nodes_[static_cast<std::size_t>(id)]; }
  const Node& at(int id) const { return nodes_[static_cast<std::size_t>(id)]; }

  int find(int id);
  int parent_of(int id);
  int new_node(Kind kind);
  void touch(int id);
  bool touched(int id) const { return at(id).epoch == epoch_; }
  Label label_of(int id) const { return touched(id) ? at(id).label : Label::Empty; }

  static int next_sibling(const Node& cur, int prev) { return cur.sib[0] == prev ? cur.sib[1] : cur.sib[0]; }
  void replace_sib(int node, int old_id, int new_id);
  void append_child(int parent, int child);
  void add_at_end(int q, int side, int child);
  void remove_child(int parent, int child);
  void replace_node(int old_id, int new_id);
  int take_single(int p);
  int gather_full(int x, const std::vector<int>& full);
  void splice(int x, int p, int inner, int outer);

  bool process_p(int x, bool is_root);
  bool process_q(int x, bool is_root);

  int leaves_;
  int root_ = -1;
  unsigned epoch_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> dsu_;
};

}  // namespace arcx::detail

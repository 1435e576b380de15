// PC-trees: all cyclic orders of a ground set in which given subsets are consecutive.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcx/core.hpp"

namespace arcx {

/// Strict precedence pairs (a, b): a must come before b.
using PartialPrec = std::vector<std::pair<int, int>>;

class PCTree {
 public:
  enum class Kind { Leaf, P, C };

  /// Tree for the cyclic orders of `ground` (distinct ids) where every constraint set is
  /// consecutive; nullopt when no such order exists.
  static std::optional<PCTree> build(const std::vector<int>& ground, const std::vector<std::vector<int>>& constraints);

  const std::vector<int>& leaves() const { return labels_; }
  std::size_t node_count() const { return kind_.size(); }

  /// Number of represented cyclic orders, saturating at `cap`.
  std::size_t order_count(std::size_t cap) const;
  /// All represented cyclic orders in canonical form. Throws Error(LimitExceeded).
  std::vector<CyclicOrder> enumerate_orders(std::size_t limit) const;
  /// Represented orders cut at `anchor` whose restriction to the elements of `target`
  /// is exactly `target`. Subtrees that break this are pruned while enumerating.
  /// Throws Error(LimitExceeded) when a subtree yields more than `limit` sequences.
  std::vector<LinearOrder> enumerate_matching(int anchor, const LinearOrder& target, std::size_t limit) const;

  /// A linear order of leaves()∖{u} extending `prec` that is a represented cyclic order
  /// cut at u. Throws Error(CyclicPrec) if prec has a cycle.
  std::optional<LinearOrder> reorder(int u, const PartialPrec& prec) const;

  /// Nested-parentheses form rooted at the least leaf, children in canonical order,
  /// e.g. "0 P(1 C(2 3 4) 5)".
  std::string serialize() const;

 private:
  struct Rooted;
  Rooted rooted_at(int leaf_index) const;
  int index_of(int element) const;

  std::vector<int> labels_;
  std::vector<Kind> kind_;
  /// Neighbors of every node; cyclic order for C-nodes. Leaves are nodes 0..|L|-1.
  std::vector<std::vector<int>> adj_;
};

/// True iff every set in `constraints` is consecutive in the cyclic order.
bool satisfies_constraints(const CyclicOrder& order, const std::vector<std::vector<int>>& constraints);

/// True iff `order` lists each pair of `prec` in the right order (pairs with absent ids ignored).
bool extends_prec(const LinearOrder& order, const PartialPrec& prec);

/// True iff the relation has a directed cycle.
bool has_cycle(const PartialPrec& prec);

}  // namespace arcx

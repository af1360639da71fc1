#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "c1p/count.hpp"
#include "c1p/symbol.hpp"

namespace c1p {

/// Default cap on the number of distinct strings any single enumeration may
/// hold.
inline constexpr std::size_t kDefaultEnumerationLimit = 10'000'000;

enum class NodeKind { Leaf, P, Q };

/// A PQ-tree node. Leaves carry a label and no children; P- and Q-nodes
/// carry ordered children and no label. Any arity is representable,
/// including the 0- and 1-child internal nodes a reduction may emit;
/// `canonicalize` removes them.
class PqNode {
 public:
  /// Throws MalformedTree if a leaf gets children, or an internal node a label.
  PqNode(NodeKind kind, std::optional<Symbol> label, std::vector<PqNode> children);

  static PqNode leaf(Symbol label);
  static PqNode leaf(std::string token);
  static PqNode p(std::vector<PqNode> children);
  static PqNode q(std::vector<PqNode> children);

  NodeKind kind() const noexcept { return kind_; }
  bool is_leaf() const noexcept { return kind_ == NodeKind::Leaf; }

  /// Throws MalformedTree on an internal node.
  const Symbol& label() const;
  const std::vector<PqNode>& children() const noexcept { return children_; }

  std::size_t leaf_count() const;

  friend bool operator==(const PqNode&, const PqNode&) = default;

 private:
  NodeKind kind_;
  std::optional<Symbol> label_;
  std::vector<PqNode> children_;
};

/// Rooted PQ-tree with at least one leaf; caches its leaf multiset.
class PqTree {
 public:
  /// Throws MalformedTree if the tree has no leaves.
  explicit PqTree(PqNode root);

  const PqNode& root() const noexcept { return root_; }
  const SymbolMultiset& leaf_multiset() const noexcept { return leaves_; }
  std::size_t size() const noexcept { return leaves_.size(); }

  /// Every Q-node has >= 2 children and every P-node >= 3.
  bool is_canonical() const;
  bool has_distinct_leaves() const;

  friend bool operator==(const PqTree& a, const PqTree& b) { return a.root_ == b.root_; }

 private:
  PqNode root_;
  SymbolMultiset leaves_;
};

/// Exact frontier set, sorted lexicographically by token sequence.
/// `complete` is false when the enumeration limit truncated it; every listed
/// string is still a genuine frontier.
struct FrontierSet {
  std::vector<SymbolString> strings;
  bool complete = true;
};

/// Bottom-up: childless internal nodes are dropped, single-child nodes are
/// replaced by their child, and two-child P-nodes become Q-nodes.
PqTree canonicalize(const PqTree& tree);

/// Leaf labels in left-to-right order.
SymbolString frontier(const PqTree& tree);

/// Fr(T): every frontier of every tree equivalent to `tree`.
///
/// Built bottom-up with per-node deduplication: a leaf yields its label, a
/// Q-node the forward and reversed concatenations over all combinations of
/// its children's sets, a P-node the concatenations over every distinct
/// arrangement of its children. Works on non-canonical trees too.
FrontierSet enumerate_frontiers(const PqTree& tree,
                                std::optional<std::size_t> limit = kDefaultEnumerationLimit);

/// Post-order count for trees with pairwise distinct labels: a leaf has one
/// frontier, a P-node d!*prod(f_i), a Q-node 2*prod(f_i). The tree is
/// canonicalized first. Throws DuplicateLeafLabels when a label repeats.
Count count_frontiers_distinct(const PqTree& tree);

/// Exact |Fr(T)| for arbitrary (repeating) labels.
///
/// Child string sets are materialized under `limit`. A Q-node root is not
/// materialized: its forward and reversed products are injective, so the
/// count is 2*prod|S_i| minus the strings readable both ways, found by a
/// pruned search. Throws EnumerationBudgetExceeded when a materialized set
/// exceeds `limit`.
Count count_frontiers_multiset(const PqTree& tree,
                               std::optional<std::size_t> limit = kDefaultEnumerationLimit);

/// Normal form of the equivalence class: P-children sorted by signature,
/// Q-children in the lexicographically smaller of the two orientations,
/// printed as an s-expression.
std::string signature(const PqTree& tree);

/// True iff one tree becomes the other by permuting P-children and
/// reversing Q-children.
bool equivalent(const PqTree& a, const PqTree& b);

}  // namespace c1p

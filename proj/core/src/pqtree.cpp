#include "c1p/pqtree.hpp"

#include <algorithm>
#include <set>

#include "c1p/errors.hpp"
#include "c1p/pqtree_io.hpp"

namespace c1p {
namespace {

void collect_leaves(const PqNode& node, SymbolMultiset& out) {
  if (node.is_leaf()) {
    out.add(node.label());
    return;
  }
  for (const auto& child : node.children()) collect_leaves(child, out);
}

void collect_frontier(const PqNode& node, SymbolString& out) {
  if (node.is_leaf()) {
    out.push_back(node.label());
    return;
  }
  for (const auto& child : node.children()) collect_frontier(child, out);
}

bool node_is_canonical(const PqNode& node) {
  switch (node.kind()) {
    case NodeKind::Leaf:
      return true;
    case NodeKind::Q:
      if (node.children().size() < 2) return false;
      break;
    case NodeKind::P:
      if (node.children().size() < 3) return false;
      break;
  }
  return std::all_of(node.children().begin(), node.children().end(), node_is_canonical);
}

// nullopt when the subtree has no leaves.
std::optional<PqNode> canonical_node(const PqNode& node) {
  if (node.is_leaf()) return node;
  std::vector<PqNode> kept;
  kept.reserve(node.children().size());
  for (const auto& child : node.children()) {
    if (auto c = canonical_node(child)) kept.push_back(std::move(*c));
  }
  if (kept.empty()) return std::nullopt;
  if (kept.size() == 1) return std::move(kept.front());
  if (node.kind() == NodeKind::P && kept.size() == 2) return PqNode::q(std::move(kept));
  return PqNode(node.kind(), std::nullopt, std::move(kept));
}

Count distinct_count(const PqNode& node) {
  if (node.is_leaf()) return 1;
  Count product = 1;
  for (const auto& child : node.children()) product *= distinct_count(child);
  const auto d = static_cast<unsigned>(node.children().size());
  return node.kind() == NodeKind::P ? factorial(d) * product : 2 * product;
}

PqNode normalized(const PqNode& node) {
  if (node.is_leaf()) return node;
  std::vector<PqNode> children;
  children.reserve(node.children().size());
  for (const auto& child : node.children()) children.push_back(normalized(child));

  std::vector<std::string> sigs;
  sigs.reserve(children.size());
  for (const auto& child : children) sigs.push_back(to_sexpr(child));

  if (node.kind() == NodeKind::P) {
    std::vector<std::size_t> order(children.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sigs[a] < sigs[b]; });
    std::vector<PqNode> sorted;
    sorted.reserve(children.size());
    for (auto i : order) sorted.push_back(std::move(children[i]));
    return PqNode::p(std::move(sorted));
  }
  std::vector<std::string> rev(sigs.rbegin(), sigs.rend());
  if (rev < sigs) std::reverse(children.begin(), children.end());
  return PqNode::q(std::move(children));
}

}  // namespace

PqNode::PqNode(NodeKind kind, std::optional<Symbol> label, std::vector<PqNode> children)
    : kind_(kind), label_(std::move(label)), children_(std::move(children)) {
  if (kind_ == NodeKind::Leaf) {
    if (!label_) throw MalformedTree("leaf without a label");
    if (!children_.empty()) throw MalformedTree("leaf '" + label_->token() + "' has children");
  } else if (label_) {
    throw MalformedTree("internal node carries label '" + label_->token() + "'");
  }
}

PqNode PqNode::leaf(Symbol label) { return PqNode(NodeKind::Leaf, std::move(label), {}); }
PqNode PqNode::leaf(std::string token) { return leaf(Symbol(std::move(token))); }
PqNode PqNode::p(std::vector<PqNode> children) {
  return PqNode(NodeKind::P, std::nullopt, std::move(children));
}
PqNode PqNode::q(std::vector<PqNode> children) {
  return PqNode(NodeKind::Q, std::nullopt, std::move(children));
}

const Symbol& PqNode::label() const {
  if (!label_) throw MalformedTree("internal node has no label");
  return *label_;
}

std::size_t PqNode::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& child : children_) n += child.leaf_count();
  return n;
}

PqTree::PqTree(PqNode root) : root_(std::move(root)) {
  collect_leaves(root_, leaves_);
  if (leaves_.empty()) throw MalformedTree("tree has no leaves");
}

bool PqTree::is_canonical() const { return node_is_canonical(root_); }

bool PqTree::has_distinct_leaves() const { return leaves_.counts().size() == leaves_.size(); }

PqTree canonicalize(const PqTree& tree) {
  auto root = canonical_node(tree.root());
  // PqTree guarantees at least one leaf, so the root never vanishes.
  return PqTree(std::move(*root));
}

SymbolString frontier(const PqTree& tree) {
  SymbolString out;
  out.reserve(tree.size());
  collect_frontier(tree.root(), out);
  return out;
}

Count count_frontiers_distinct(const PqTree& tree) {
  if (!tree.has_distinct_leaves()) {
    for (const auto& [sym, k] : tree.leaf_multiset().counts()) {
      if (k > 1) {
        throw DuplicateLeafLabels("label '" + sym.token() + "' occurs " + std::to_string(k) +
                                  " times; the product formula needs distinct labels");
      }
    }
  }
  return distinct_count(canonicalize(tree).root());
}

std::string signature(const PqTree& tree) { return to_sexpr(normalized(tree.root())); }

bool equivalent(const PqTree& a, const PqTree& b) {
  if (a.leaf_multiset() != b.leaf_multiset()) return false;
  return signature(a) == signature(b);
}

}  // namespace c1p

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace magnusforest {

/// Planar binary tree: a single leaf, or an ordered pair of subtrees joined
/// under a new internal vertex (the grafting t1 ∨ t2). Values are immutable
/// and cheap to copy; the canonical text form "." / "(L R)" is precomputed
/// per node so comparison, hashing and rendering never re-walk the tree.
///
/// Degree is the number of internal vertices; a tree of degree n has n+1
/// leaves and there are Catalan(n) distinct trees of degree n.
class BinaryTree {
 public:
  BinaryTree();                                                 // the leaf
  BinaryTree(const BinaryTree& left, const BinaryTree& right);  // graft ∨

  bool is_leaf() const { return node_->degree == 0; }
  int degree() const { return node_->degree; }
  int leaves() const { return node_->degree + 1; }

  // Unique decomposition t = left() ∨ right(); throws on the leaf.
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  const std::string& repr() const { return node_->repr; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return a.node_ == b.node_ || a.node_->repr == b.node_->repr;
  }
  // Canonical order: by degree, then lexicographic on the text form.
  friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.node_->repr.compare(b.node_->repr) <=> 0;
  }

 private:
  struct Node {
    std::vector<BinaryTree> parts;  // empty for the leaf, {left, right} otherwise
    int degree = 0;
    std::string repr;
    std::size_t hash = 0;
  };
  static const std::shared_ptr<const Node>& leaf_node();

  std::shared_ptr<const Node> node_;
};

inline BinaryTree graft_vee(const BinaryTree& t1, const BinaryTree& t2) {
  return BinaryTree(t1, t2);
}

}  // namespace magnusforest

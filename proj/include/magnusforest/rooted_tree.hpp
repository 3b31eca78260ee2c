#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace magnusforest {

/// Planar rooted tree: a root vertex carrying an ordered sequence of branch
/// subtrees. The empty sequence is the single vertex. Graded by edge count.
/// Immutable value type with precomputed canonical form "[...]", used as the
/// basis of the free dendriform algebra, so ordering and hashing are hot.
class RootedTree {
 public:
  RootedTree();  // the single vertex
  explicit RootedTree(std::vector<RootedTree> children);

  bool is_single_vertex() const { return node_->children.empty(); }
  int degree() const { return node_->degree; }  // number of edges
  const std::vector<RootedTree>& children() const { return node_->children; }

  const std::string& repr() const { return node_->repr; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.node_ == b.node_ || a.node_->repr == b.node_->repr;
  }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.node_->repr.compare(b.node_->repr) <=> 0;
  }

 private:
  struct Node {
    std::vector<RootedTree> children;
    int degree = 0;
    std::string repr;
    std::size_t hash = 0;
  };
  static const std::shared_ptr<const Node>& vertex_node();

  std::shared_ptr<const Node> node_;
};

/// Left Butcher product t ↘ u: grafts t as the new leftmost branch of u's
/// root. Every tree of positive degree factors uniquely this way.
RootedTree left_butcher(const RootedTree& t, const RootedTree& u);

/// First branch of a positive-degree tree (the t of t ↘ u).
const RootedTree& butcher_left(const RootedTree& tree);
/// The tree with its first branch removed (the u of t ↘ u).
RootedTree butcher_rest(const RootedTree& tree);

int leaf_count(const RootedTree& tree);

}  // namespace magnusforest

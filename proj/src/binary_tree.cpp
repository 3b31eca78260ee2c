#include "magnusforest/binary_tree.hpp"

#include <functional>
#include <stdexcept>

namespace magnusforest {

const std::shared_ptr<const BinaryTree::Node>& BinaryTree::leaf_node() {
  static const std::shared_ptr<const Node> leaf = [] {
    auto n = std::make_shared<Node>();
    n->degree = 0;
    n->repr = ".";
    n->hash = std::hash<std::string>{}(n->repr);
    return n;
  }();
  return leaf;
}

BinaryTree::BinaryTree() : node_(leaf_node()) {}

BinaryTree::BinaryTree(const BinaryTree& left, const BinaryTree& right) {
  auto n = std::make_shared<Node>();
  n->parts = {left, right};
  n->degree = left.degree() + right.degree() + 1;
  n->repr = "(" + left.repr() + " " + right.repr() + ")";
  n->hash = std::hash<std::string>{}(n->repr);
  node_ = std::move(n);
}

const BinaryTree& BinaryTree::left() const {
  if (is_leaf()) throw std::invalid_argument("leaf has no left part");
  return node_->parts[0];
}

const BinaryTree& BinaryTree::right() const {
  if (is_leaf()) throw std::invalid_argument("leaf has no right part");
  return node_->parts[1];
}

}  // namespace magnusforest

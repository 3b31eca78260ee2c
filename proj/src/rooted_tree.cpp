#include "magnusforest/rooted_tree.hpp"

#include <functional>
#include <stdexcept>

namespace magnusforest {

const std::shared_ptr<const RootedTree::Node>& RootedTree::vertex_node() {
  static const std::shared_ptr<const Node> vertex = [] {
    auto n = std::make_shared<Node>();
    n->degree = 0;
    n->repr = "[]";
    n->hash = std::hash<std::string>{}(n->repr);
    return n;
  }();
  return vertex;
}

RootedTree::RootedTree() : node_(vertex_node()) {}

RootedTree::RootedTree(std::vector<RootedTree> children) {
  if (children.empty()) {
    node_ = vertex_node();
    return;
  }
  auto n = std::make_shared<Node>();
  n->degree = 0;
  n->repr = "[";
  for (const RootedTree& child : children) {
    n->degree += 1 + child.degree();
    n->repr += child.repr();
  }
  n->repr += "]";
  n->hash = std::hash<std::string>{}(n->repr);
  n->children = std::move(children);
  node_ = std::move(n);
}

RootedTree left_butcher(const RootedTree& t, const RootedTree& u) {
  std::vector<RootedTree> children;
  children.reserve(u.children().size() + 1);
  children.push_back(t);
  children.insert(children.end(), u.children().begin(), u.children().end());
  return RootedTree(std::move(children));
}

const RootedTree& butcher_left(const RootedTree& tree) {
  if (tree.is_single_vertex())
    throw std::invalid_argument("single vertex has no Butcher factorization");
  return tree.children().front();
}

RootedTree butcher_rest(const RootedTree& tree) {
  if (tree.is_single_vertex())
    throw std::invalid_argument("single vertex has no Butcher factorization");
  std::vector<RootedTree> rest(tree.children().begin() + 1, tree.children().end());
  return RootedTree(std::move(rest));
}

int leaf_count(const RootedTree& tree) {
  if (tree.children().empty()) return 1;
  int count = 0;
  for (const RootedTree& child : tree.children()) count += leaf_count(child);
  return count;
}

}  // namespace magnusforest

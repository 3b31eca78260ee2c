#include "magnusforest/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace magnusforest {

namespace {

std::mutex enum_mutex;

template <typename Tree, typename Graft>
const std::vector<Tree>& enumerate_cached(int degree, std::map<int, std::vector<Tree>>& cache,
                                          Graft graft) {
  if (degree < 0) throw std::invalid_argument("negative tree degree");
  std::lock_guard<std::mutex> lock(enum_mutex);
  for (int n = 0; n <= degree; ++n) {
    if (cache.count(n)) continue;
    std::vector<Tree> trees;
    if (n == 0) {
      trees.push_back(Tree());
    } else {
      // Unique factorization through the degree-raising product.
      for (int k = 0; k <= n - 1; ++k)
        for (const Tree& t1 : cache[k])
          for (const Tree& t2 : cache[n - 1 - k]) trees.push_back(graft(t1, t2));
      std::sort(trees.begin(), trees.end());
    }
    cache.emplace(n, std::move(trees));
  }
  return cache[degree];
}

}  // namespace

const std::vector<BinaryTree>& enumerate_binary(int degree) {
  static std::map<int, std::vector<BinaryTree>> cache;
  return enumerate_cached<BinaryTree>(degree, cache,
                                      [](const BinaryTree& a, const BinaryTree& b) {
                                        return graft_vee(a, b);
                                      });
}

const std::vector<RootedTree>& enumerate_rooted(int degree) {
  static std::map<int, std::vector<RootedTree>> cache;
  return enumerate_cached<RootedTree>(degree, cache,
                                      [](const RootedTree& a, const RootedTree& b) {
                                        return left_butcher(a, b);
                                      });
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

RootedTree ladder(int n) {
  RootedTree t;
  for (int i = 0; i < n; ++i) t = left_butcher(t, RootedTree());
  return t;
}

RootedTree corolla(int n) {
  RootedTree t;
  for (int i = 0; i < n; ++i) t = left_butcher(RootedTree(), t);
  return t;
}

BinaryTree left_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = graft_vee(t, BinaryTree());
  return t;
}

BinaryTree right_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = graft_vee(BinaryTree(), t);
  return t;
}

RootedTree rotate(const BinaryTree& tree) {
  if (tree.is_leaf()) return RootedTree();
  return left_butcher(rotate(tree.left()), rotate(tree.right()));
}

BinaryTree unrotate(const RootedTree& tree) {
  if (tree.is_single_vertex()) return BinaryTree();
  return graft_vee(unrotate(butcher_left(tree)), unrotate(butcher_rest(tree)));
}

namespace {

int left_pointing_leaves(const BinaryTree& t) {
  int count = t.left().is_leaf() ? 1 : left_pointing_leaves(t.left());
  if (!t.right().is_leaf()) count += left_pointing_leaves(t.right());
  return count;
}

}  // namespace

int descent_count(const BinaryTree& tree) {
  if (tree.is_leaf()) return 0;
  // The leftmost leaf always points left and never counts.
  return left_pointing_leaves(tree) - 1;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), sum_(0) {
  if (parts_.empty()) throw std::invalid_argument("composition must be non-empty");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    sum_ += p;
  }
}

namespace {

// Vertices indexed in depth-first order, children left to right; root is 0.
struct FlatRooted {
  std::vector<int> parent;
  std::vector<int> leaves;  // vertex ids, left-to-right planar order
};

void flatten_rooted(const RootedTree& t, int self, FlatRooted& flat) {
  if (t.children().empty()) {
    flat.leaves.push_back(self);
    return;
  }
  for (const RootedTree& child : t.children()) {
    flat.parent.push_back(self);
    const int id = static_cast<int>(flat.parent.size()) - 1;
    flatten_rooted(child, id, flat);
  }
}

}  // namespace

Composition tree_composition(const RootedTree& tree) {
  if (tree.is_single_vertex())
    throw std::invalid_argument("tree_composition requires degree >= 1");
  FlatRooted flat;
  flat.parent.push_back(-1);  // root
  flatten_rooted(tree, 0, flat);

  const int k = static_cast<int>(flat.leaves.size());
  std::vector<int> parts(k);
  for (int s = 0; s < k; ++s) {
    if (s + 1 < k) {
      std::vector<bool> on_next_path(flat.parent.size(), false);
      for (int v = flat.leaves[s + 1]; v != -1; v = flat.parent[v]) on_next_path[v] = true;
      int steps = 0;
      int v = flat.leaves[s];
      while (!on_next_path[v]) {
        v = flat.parent[v];
        ++steps;
      }
      parts[s] = steps;
    } else {
      int steps = 0;
      for (int v = flat.leaves[s]; v != 0; v = flat.parent[v]) ++steps;
      parts[s] = steps;  // height of the rightmost leaf
    }
  }
  return Composition(std::move(parts));
}

namespace {

int infix_walk(const BinaryTree& t, int offset, std::vector<int>& parent) {
  const int left_internal = t.left().degree();
  const int root = offset + left_internal;
  if (!t.left().is_leaf()) parent[infix_walk(t.left(), offset, parent)] = root;
  if (!t.right().is_leaf()) parent[infix_walk(t.right(), root + 1, parent)] = root;
  return root;
}

}  // namespace

std::vector<int> infix_parents(const BinaryTree& tree) {
  std::vector<int> parent(tree.degree(), -1);
  if (!tree.is_leaf()) infix_walk(tree, 0, parent);
  return parent;
}

LeveledBinaryTree::LeveledBinaryTree(BinaryTree tree, std::vector<int> levels)
    : tree_(std::move(tree)), levels_(std::move(levels)) {
  const int n = tree_.degree();
  if (static_cast<int>(levels_.size()) != n)
    throw std::invalid_argument("level map size must equal the internal vertex count");
  std::vector<bool> seen(n + 1, false);
  for (int lv : levels_) {
    if (lv < 1 || lv > n || seen[lv])
      throw std::invalid_argument("level map must be a bijection onto {1..n}");
    seen[lv] = true;
  }
  // Levels grow toward the root: the root is the deepest vertex.
  const std::vector<int> parent = infix_parents(tree_);
  for (int i = 0; i < n; ++i)
    if (parent[i] != -1 && levels_[parent[i]] < levels_[i])
      throw std::invalid_argument("level map must decrease away from the root");
}

namespace {

void skip_ws(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
    ++pos;
}

RootedTree parse_rooted_at(const std::string& text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  std::vector<RootedTree> children;
  while (true) {
    skip_ws(text, pos);
    if (pos >= text.size()) throw ParseError("unterminated tree, expected ']'", pos);
    if (text[pos] == ']') {
      ++pos;
      return RootedTree(std::move(children));
    }
    children.push_back(parse_rooted_at(text, pos));
  }
}

BinaryTree parse_binary_at(const std::string& text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos >= text.size()) throw ParseError("expected '.' or '('", pos);
  if (text[pos] == '.') {
    ++pos;
    return BinaryTree();
  }
  if (text[pos] != '(') throw ParseError("expected '.' or '('", pos);
  ++pos;
  BinaryTree left = parse_binary_at(text, pos);
  BinaryTree right = parse_binary_at(text, pos);
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
  ++pos;
  return graft_vee(left, right);
}

}  // namespace

RootedTree parse_rooted(const std::string& text) {
  std::size_t pos = 0;
  RootedTree t = parse_rooted_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after tree", pos);
  return t;
}

BinaryTree parse_binary(const std::string& text) {
  std::size_t pos = 0;
  BinaryTree t = parse_binary_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after tree", pos);
  return t;
}

}  // namespace magnusforest

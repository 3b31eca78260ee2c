#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "magnusforest/binary_tree.hpp"
#include "magnusforest/rational.hpp"
#include "magnusforest/rooted_tree.hpp"

namespace magnusforest {

/// All trees of the given degree, exactly once, in canonical order
/// (lexicographic on the canonical text form). Sizes follow the Catalan
/// numbers 1, 1, 2, 5, 14, 42, 132, ...
const std::vector<BinaryTree>& enumerate_binary(int degree);
const std::vector<RootedTree>& enumerate_rooted(int degree);

Integer catalan(int n);

enum class TreeFamily { Ladder, Corolla, LeftComb, RightComb };

RootedTree ladder(int n);      // ℓ: chain of n edges
RootedTree corolla(int n);     // c: n branches on one root
BinaryTree left_comb(int n);   // t ∨ leaf iterated
BinaryTree right_comb(int n);  // leaf ∨ t iterated

/// Knuth's rotation correspondence and its inverse. Degree preserving:
/// internal vertices map to edges. rotate(t1 ∨ t2) = rotate(t1) ↘ rotate(t2).
RootedTree rotate(const BinaryTree& tree);
BinaryTree unrotate(const RootedTree& tree);

/// Number of leaves pointing to the left, the leftmost leaf excluded.
int descent_count(const BinaryTree& tree);

/// Ordered tuple of positive integers summing to n.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int sum() const { return sum_; }
  int length() const { return static_cast<int>(parts_.size()); }
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int sum_;
};

/// The composition attached to a positive-degree rooted tree: one part per
/// leaf, numbered left to right. The last part is the height of the
/// rightmost leaf; part s is the edge distance from leaf s down to the first
/// vertex on the root path of leaf s+1. Sum = degree, length = leaf count.
Composition tree_composition(const RootedTree& tree);

/// Planar binary tree with a level attached to every internal vertex,
/// indexed in left-to-right infix order. Valid level maps are bijections
/// onto {1..n} that grow toward the root (the root carries n); the number of
/// valid maps on a fixed tree equals the fiber size of the level-forgetting
/// surjection from permutations.
class LeveledBinaryTree {
 public:
  LeveledBinaryTree(BinaryTree tree, std::vector<int> levels);  // validates
  const BinaryTree& tree() const { return tree_; }
  const std::vector<int>& levels() const { return levels_; }
  friend bool operator==(const LeveledBinaryTree&, const LeveledBinaryTree&) = default;

 private:
  BinaryTree tree_;
  std::vector<int> levels_;
};

/// Infix positions of the parent of every internal vertex (-1 for the root),
/// with internal vertices indexed 0..n-1 in left-to-right infix order.
std::vector<int> infix_parents(const BinaryTree& tree);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " at byte " + std::to_string(byte_offset)),
        offset(byte_offset) {}
  std::size_t offset;
};

/// Text grammar. Rooted := "[" Rooted* "]". Binary := "." | "(" Binary
/// Binary ")" with optional whitespace between tokens. render() returns the
/// canonical form (single space between binary children).
RootedTree parse_rooted(const std::string& text);
BinaryTree parse_binary(const std::string& text);
inline const std::string& render(const RootedTree& t) { return t.repr(); }
inline const std::string& render(const BinaryTree& t) { return t.repr(); }

}  // namespace magnusforest

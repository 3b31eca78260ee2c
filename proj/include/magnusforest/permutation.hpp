#pragma once

#include <compare>
#include <vector>

#include "magnusforest/rational.hpp"
#include "magnusforest/trees.hpp"

namespace magnusforest {

/// Permutation of {1..n} in one-line notation, n >= 1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);  // validates bijectivity
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  int descent_count() const;  // |{i : word[i] > word[i+1]}|
  Permutation inverse() const;

  friend Permutation compose(const Permutation& f, const Permutation& g);  // f ∘ g
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

std::vector<Permutation> all_permutations(int n);

enum class ShuffleKind { All, Sh1, Sh2 };

/// The (n,m)-shuffles: increasing on {1..n} and on {n+1..n+m}. Sh1 keeps
/// ω(n+m) = n+m, Sh2 keeps ω(n) = n+m; together they partition the set.
std::vector<Permutation> shuffle_set(int n, int m, ShuffleKind kind);

/// Order-isomorphic permutation of a word of distinct integers.
Permutation standardize(const std::vector<int>& word);

/// σ × τ: σ on the first n letters, τ shifted onto the last m.
Permutation concat_shift(const Permutation& sigma, const Permutation& tau);

/// Bijection between S_n and leveled binary trees: the level of the i-th
/// infix internal vertex is σ(i). The inverse reads levels back off.
LeveledBinaryTree perm_to_leveled(const Permutation& sigma);
Permutation leveled_to_perm(const LeveledBinaryTree& lt);

/// Level-forgetting surjection onto degree-n binary trees.
BinaryTree psi(const Permutation& sigma);

/// Permutations in the ψ fiber of a binary tree, in canonical order.
std::vector<Permutation> psi_fiber(const BinaryTree& tree);

/// (-1)^{d(σ)} / (n * binom(n-1, d(σ))): the permutation-side Magnus weight.
Rational mps_coefficient(const Permutation& sigma);

}  // namespace magnusforest

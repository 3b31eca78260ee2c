#include "magnusforest/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace magnusforest {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1) throw std::invalid_argument("permutation must have size >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("word is not a permutation of {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

int Permutation::descent_count() const {
  int d = 0;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i)
    if (word_[i] > word_[i + 1]) ++d;
  return d;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("composition size mismatch");
  std::vector<int> word(g.word().size());
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = f(g.word()[i]);
  return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<Permutation> shuffle_set(int n, int m, ShuffleKind kind) {
  if (n < 0 || m < 0 || n + m < 1) throw std::invalid_argument("shuffle_set requires n+m >= 1");
  if (kind != ShuffleKind::All && (n < 1 || m < 1))
    throw std::invalid_argument("split shuffle sets require n, m >= 1");
  const int total = n + m;
  std::vector<Permutation> out;
  // Choose the value set of the first block; both blocks stay increasing.
  std::vector<int> choice(n);
  std::iota(choice.begin(), choice.end(), 1);
  while (true) {
    std::vector<int> word(total);
    std::vector<bool> used(total + 1, false);
    for (int i = 0; i < n; ++i) {
      word[i] = choice[i];
      used[choice[i]] = true;
    }
    int next = n;
    for (int v = 1; v <= total; ++v)
      if (!used[v]) word[next++] = v;
    const bool sh1 = word[total - 1] == total;  // ω(n+m) = n+m
    const bool sh2 = n >= 1 && word[n - 1] == total;  // ω(n) = n+m
    if (kind == ShuffleKind::All || (kind == ShuffleKind::Sh1 && sh1) ||
        (kind == ShuffleKind::Sh2 && sh2))
      out.push_back(Permutation(std::move(word)));
    // next n-combination of {1..total}
    if (n == 0) break;
    int i = n - 1;
    while (i >= 0 && choice[i] == total - (n - 1 - i)) --i;
    if (i < 0) break;
    ++choice[i];
    for (int j = i + 1; j < n; ++j) choice[j] = choice[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation concat_shift(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> word = sigma.word();
  word.reserve(sigma.size() + tau.size());
  for (int v : tau.word()) word.push_back(v + sigma.size());
  return Permutation(std::move(word));
}

Permutation standardize(const std::vector<int>& word) {
  if (word.empty()) throw std::invalid_argument("cannot standardize an empty word");
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("standardize requires distinct entries");
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) -
                              sorted.begin()) +
             1;
  }
  return Permutation(std::move(out));
}

namespace {

// Recursive tree shape of the bijection: split the word at its maximum, the
// part before it becomes the left subtree.
BinaryTree tree_of_word(const std::vector<int>& word) {
  if (word.empty()) return BinaryTree();
  const auto max_it = std::max_element(word.begin(), word.end());
  const std::vector<int> before(word.begin(), max_it);
  const std::vector<int> after(max_it + 1, word.end());
  const std::vector<int> left = before.empty() ? before : standardize(before).word();
  const std::vector<int> right = after.empty() ? after : standardize(after).word();
  return graft_vee(tree_of_word(left), tree_of_word(right));
}

}  // namespace

LeveledBinaryTree perm_to_leveled(const Permutation& sigma) {
  return LeveledBinaryTree(tree_of_word(sigma.word()), sigma.word());
}

Permutation leveled_to_perm(const LeveledBinaryTree& lt) {
  return Permutation(lt.levels());
}

BinaryTree psi(const Permutation& sigma) { return tree_of_word(sigma.word()); }

std::vector<Permutation> psi_fiber(const BinaryTree& tree) {
  if (tree.degree() < 1) throw std::invalid_argument("psi_fiber requires degree >= 1");
  std::vector<Permutation> fiber;
  for (const Permutation& sigma : all_permutations(tree.degree()))
    if (psi(sigma) == tree) fiber.push_back(sigma);
  return fiber;
}

Rational mps_coefficient(const Permutation& sigma) {
  const int n = sigma.size();
  const int d = sigma.descent_count();
  const Rational value(1, Integer(n) * binomial(n - 1, d));
  return d % 2 == 0 ? value : -value;
}

}  // namespace magnusforest

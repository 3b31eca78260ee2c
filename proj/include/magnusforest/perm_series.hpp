#pragma once

#include <map>

#include "magnusforest/permutation.hpp"

namespace magnusforest {

/// Truncated element of the shuffle dendriform algebra on ⊕_n k[S_n]: a
/// rational linear combination of permutations graded by size, plus an
/// explicit constant term for the empty-word unit. No zero coefficients are
/// stored and products respect the truncation degree.
class PermSeries {
 public:
  explicit PermSeries(int trunc);
  static PermSeries unit(int trunc);
  static PermSeries basis(const Permutation& sigma, int trunc);

  int trunc() const { return trunc_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  Rational coefficient(const Permutation& sigma) const;
  Rational constant_term() const { return constant_; }
  bool is_zero() const { return constant_ == 0 && terms_.empty(); }
  bool augmentation_ideal() const { return constant_ == 0; }

  PermSeries& add_constant(const Rational& coeff);
  PermSeries& add_term(const Permutation& sigma, const Rational& coeff);

  PermSeries& operator+=(const PermSeries& other);
  PermSeries& operator-=(const PermSeries& other);
  PermSeries& operator*=(const Rational& scalar);
  friend PermSeries operator+(PermSeries a, const PermSeries& b) { return a += b; }
  friend PermSeries operator-(PermSeries a, const PermSeries& b) { return a -= b; }
  friend PermSeries operator*(const Rational& c, PermSeries s) { return s *= c; }
  friend bool operator==(const PermSeries&, const PermSeries&) = default;

 private:
  int trunc_;
  Rational constant_;
  std::map<Permutation, Rational> terms_;
};

/// Shuffle product Σ_ω ω ∘ (σ × τ) over all (n,m)-shuffles; the empty word
/// is the unit.
PermSeries perm_star(const PermSeries& x, const PermSeries& y);

/// Half-products over the Sh2 (≺) and Sh1 (≻) shuffle subsets. Both
/// arguments must lie in the augmentation ideal.
PermSeries perm_prec(const PermSeries& x, const PermSeries& y);
PermSeries perm_succ(const PermSeries& x, const PermSeries& y);

/// Fiber-summing dual of ψ: the sum of all permutations mapping onto the
/// tree; extends the level-forgetting surjection to a dendriform morphism.
PermSeries psi_star(const BinaryTree& tree, int trunc);

}  // namespace magnusforest

#pragma once

#include <map>

#include "magnusforest/rational.hpp"
#include "magnusforest/trees.hpp"

namespace magnusforest {

/// Selects which term of the recursive product split
///   s ⋆ t = s1 ↘ (s2 ⋆ t) + (s ⋆ t1) ↘ t2
/// is the left composition ≺. FirstTermPrec is the normative choice; the
/// mirrored one exists so the verify suite can demonstrate that it breaks
/// the logarithm identity.
enum class SplitConvention { FirstTermPrec, SecondTermPrec };

/// Truncated linear combination of planar rooted trees with exact rational
/// coefficients: an element of the (completed, unital) free dendriform
/// algebra on one generator. The coefficient of the single-vertex tree is
/// the constant term; all stored trees have degree <= trunc and zero
/// coefficients are never stored. The grading doubles as the dummy
/// expansion parameter: the degree-n component is the order-n coefficient.
class TreeSeries {
 public:
  explicit TreeSeries(int trunc);
  static TreeSeries unit(int trunc);
  static TreeSeries basis(const RootedTree& tree, int trunc);

  int trunc() const { return trunc_; }
  const std::map<RootedTree, Rational>& terms() const { return terms_; }
  Rational coefficient(const RootedTree& tree) const;
  Rational constant_term() const;
  bool is_zero() const { return terms_.empty(); }
  bool augmentation_ideal() const { return constant_term() == 0; }

  TreeSeries& add_term(const RootedTree& tree, const Rational& coeff);
  TreeSeries degree_part(int degree) const;
  TreeSeries truncated(int new_trunc) const;

  TreeSeries& operator+=(const TreeSeries& other);
  TreeSeries& operator-=(const TreeSeries& other);
  TreeSeries& operator*=(const Rational& scalar);
  friend TreeSeries operator+(TreeSeries a, const TreeSeries& b) { return a += b; }
  friend TreeSeries operator-(TreeSeries a, const TreeSeries& b) { return a -= b; }
  friend TreeSeries operator*(const Rational& c, TreeSeries s) { return s *= c; }
  friend bool operator==(const TreeSeries&, const TreeSeries&) = default;

 private:
  int trunc_;
  std::map<RootedTree, Rational> terms_;
};

/// Associative product transported from the planar-binary picture through
/// the rotation correspondence; the single vertex is its unit.
TreeSeries star(const TreeSeries& x, const TreeSeries& y);

/// Dendriform half-products. 1 ≺ 1 and 1 ≻ 1 are undefined and rejected;
/// otherwise x ≺ 1 = x = 1 ≻ x and 1 ≺ x = 0 = x ≻ 1.
TreeSeries prec(const TreeSeries& x, const TreeSeries& y,
                SplitConvention convention = SplitConvention::FirstTermPrec);
TreeSeries succ(const TreeSeries& x, const TreeSeries& y,
                SplitConvention convention = SplitConvention::FirstTermPrec);

/// Left pre-Lie product x ▷ y = x ≻ y − y ≺ x on the augmentation ideal.
TreeSeries prelie(const TreeSeries& x, const TreeSeries& y,
                  SplitConvention convention = SplitConvention::FirstTermPrec);

TreeSeries exp_star(const TreeSeries& x);        // sum x^{⋆n}/n!, constant term 0
TreeSeries log_star(const TreeSeries& u);        // constant term exactly 1

/// Unique solution of X = 1 + a ≺ X, computed degree by degree.
TreeSeries solve_left_fixpoint(const TreeSeries& a, int trunc,
                               SplitConvention convention = SplitConvention::FirstTermPrec);

/// Closed form of ladder ⋆ ladder: the m+1 term sum of iterated left
/// Butcher products. Must agree with star on ladder basis elements.
TreeSeries ladder_star(int n, int m, int trunc);

/// Coefficient of a degree-n tree in the logarithm of 1 + (sum of ladders):
/// (-1)^{L-1} / (n * binom(n-1, L-1)) with L the leaf count.
Rational magnus_coefficient(const RootedTree& tree);

/// Coefficient of a degree-n tree in log of the ≺ fixpoint series: differs
/// from magnus_coefficient by the per-degree sign (-1)^{n-1}.
Rational fixpoint_log_coefficient(const RootedTree& tree);

/// Binary-tree form of magnus_coefficient through the descent statistic:
/// (-1)^{d} / (n * binom(n-1, d)); equals magnus_coefficient(rotate(t)).
Rational descent_magnus_coefficient(const BinaryTree& tree);

/// Sum of magnus_coefficient(τ)·τ over all trees of degree 1..N.
TreeSeries closed_magnus_series(int trunc);

/// Independent oracle: log_star(1 + ladder(1) + ... + ladder(N)) computed
/// directly from the ⋆ product, no coefficient formula involved.
TreeSeries ladder_log_oracle(int trunc);

/// Bernoulli numbers with B1 = -1/2, by the standard recurrence.
Rational bernoulli(int m);

/// Degree-by-degree solution of Ω' = Σ_m (B_m/m!) L_{Ω'▷}^(m)(a).
TreeSeries prelie_magnus_series(const TreeSeries& a, int trunc,
                                SplitConvention convention = SplitConvention::FirstTermPrec);

}  // namespace magnusforest

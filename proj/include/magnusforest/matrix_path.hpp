#pragma once

#include <vector>

#include "magnusforest/matrices.hpp"
#include "magnusforest/poly.hpp"
#include "magnusforest/rooted_tree.hpp"

namespace magnusforest {

/// Square matrix whose entries are univariate polynomials in t with exact
/// rational coefficients: the concrete Rota-Baxter algebra the Magnus
/// formulas are evaluated in. Everything downstream stays exact.
class MatPolyPath {
 public:
  explicit MatPolyPath(int dim);
  static MatPolyPath identity(int dim);
  static MatPolyPath scalar(const Poly& p);  // 1x1

  int dim() const { return dim_; }
  Poly& at(int row, int col) { return entries_[row * dim_ + col]; }
  const Poly& at(int row, int col) const { return entries_[row * dim_ + col]; }
  bool is_zero() const;

  RatMatrix eval(const Rational& t) const;

  MatPolyPath& operator+=(const MatPolyPath& other);
  MatPolyPath& operator-=(const MatPolyPath& other);
  friend MatPolyPath operator+(MatPolyPath a, const MatPolyPath& b) { return a += b; }
  friend MatPolyPath operator-(MatPolyPath a, const MatPolyPath& b) { return a -= b; }
  friend MatPolyPath operator*(const MatPolyPath& a, const MatPolyPath& b);
  friend MatPolyPath operator*(const Rational& c, MatPolyPath m);
  friend bool operator==(const MatPolyPath&, const MatPolyPath&) = default;

 private:
  int dim_;
  std::vector<Poly> entries_;
};

/// Entrywise antiderivative vanishing at t = 0: the weight-zero Rota-Baxter
/// operator of the path algebra.
MatPolyPath rb_integral(const MatPolyPath& f);

MatPolyPath path_derivative(const MatPolyPath& f);

/// Rota-Baxter operator of weight θ built on the polynomial antiderivative.
/// Only θ = 0 satisfies the Rota-Baxter relation for this R; the θ terms
/// appear in the induced products below.
struct WeightedRBAdapter {
  Rational weight;

  MatPolyPath apply(const MatPolyPath& f) const { return rb_integral(f); }
  // R~ = -θ id - R, also weight θ.
  MatPolyPath tilde(const MatPolyPath& f) const {
    return (Rational(-1) * (weight * f)) - rb_integral(f);
  }
};

/// Dendriform and pre-Lie products induced on paths:
///   f ≺ g = f R(g) + θ f g,  f ≻ g = R(f) g,
///   f ⋆ g = R(f) g + f R(g) + θ f g,  f ▷ g = [R(f), g] − θ g f.
MatPolyPath path_prec(const MatPolyPath& f, const MatPolyPath& g, const Rational& theta = 0);
MatPolyPath path_succ(const MatPolyPath& f, const MatPolyPath& g, const Rational& theta = 0);
MatPolyPath path_star(const MatPolyPath& f, const MatPolyPath& g, const Rational& theta = 0);
MatPolyPath path_prelie(const MatPolyPath& f, const MatPolyPath& g, const Rational& theta = 0);

/// Dendriform-morphism evaluation of a rooted tree on the path a:
/// E(t1 ↘ t2) = (E(t1) ≻ a) ≺ E(t2) with the single vertex acting as the
/// formal unit. The single vertex itself evaluates to the identity matrix.
MatPolyPath eval_tree_path(const RootedTree& tree, const MatPolyPath& a);

/// The mirrored recursion E(t1 ↘ t2) = E(t2) ≻ (a ≺ E(t1)), kept only so
/// the verify suite can demonstrate which convention matches the
/// permutation route.
MatPolyPath eval_tree_path_mirrored(const RootedTree& tree, const MatPolyPath& a);

/// Truncated fundamental solution 1 + R(a) + R(aR(a)) + ... to M nested
/// levels, as a polynomial path.
MatPolyPath chen_reference_path(const MatPolyPath& a, int levels);

/// The same, evaluated exactly at s.
RatMatrix chen_reference(const MatPolyPath& a, int levels, const Rational& s);

}  // namespace magnusforest

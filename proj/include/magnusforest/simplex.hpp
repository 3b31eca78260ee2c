#pragma once

#include <map>
#include <vector>

#include "magnusforest/matrix_path.hpp"
#include "magnusforest/permutation.hpp"

namespace magnusforest {

/// Polynomial in u_1..u_k with exact rational coefficients, keyed by
/// exponent vector. Supports exactly what nested simplex integration
/// needs: antiderivative in one variable, pushing a variable onto the
/// next outer one at the upper integration bound, and evaluating the
/// outermost variable at a rational point.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars);
  static MultiPoly from_univariate(const Poly& p, int var, int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  MultiPoly& add_term(std::vector<int> exponents, const Rational& coeff);
  MultiPoly antiderivative(int var) const;
  MultiPoly substitute_var(int var, int replacement) const;  // u_var := u_replacement
  MultiPoly substitute_value(int var, const Rational& value) const;

  MultiPoly& operator+=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, MultiPoly p);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

/// Square matrix of multivariate polynomials: the integrand (and partial
/// integrals) over the nested simplex 0 < u_n < ... < u_1 < s.
class SimplexPoly {
 public:
  SimplexPoly(int dim, int nvars);
  static SimplexPoly identity(int dim, int nvars);
  /// The factor a(u_var) of the integrand.
  static SimplexPoly path_factor(const MatPolyPath& a, int var, int nvars);

  int dim() const { return dim_; }
  int nvars() const { return nvars_; }
  MultiPoly& at(int row, int col) { return entries_[row * dim_ + col]; }
  const MultiPoly& at(int row, int col) const { return entries_[row * dim_ + col]; }

  SimplexPoly antiderivative(int var) const;
  SimplexPoly substitute_var(int var, int replacement) const;
  RatMatrix substitute_value_full(int var, const Rational& value) const;  // must be last var left

  friend SimplexPoly operator*(const SimplexPoly& a, const SimplexPoly& b);
  friend SimplexPoly operator-(const SimplexPoly& a, const SimplexPoly& b);

 private:
  int dim_;
  int nvars_;
  std::vector<MultiPoly> entries_;
};

/// Exact iterated integral of a(u_{σ(1)}) ... a(u_{σ(n)}) over the simplex
/// 0 < u_n < ... < u_1 < s, integrating u_n first.
RatMatrix eval_perm_integral(const Permutation& sigma, const MatPolyPath& a, const Rational& s);

/// Same domain and weights but with the right-nested commutator integrand
/// [a(u_{σ(1)}), [a(u_{σ(2)}), ... , a(u_{σ(n)})]...].
RatMatrix eval_perm_bracket_integral(const Permutation& sigma, const MatPolyPath& a,
                                     const Rational& s);

}  // namespace magnusforest

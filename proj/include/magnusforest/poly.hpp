#pragma once

#include <vector>

#include "magnusforest/rational.hpp"

namespace magnusforest {

/// Univariate polynomial in t with exact rational coefficients, stored
/// densely with trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly variable();  // t

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(int k) const;

  Rational eval(const Rational& t) const;
  Poly antiderivative() const;  // value 0 at t = 0
  Poly derivative() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly p);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace magnusforest

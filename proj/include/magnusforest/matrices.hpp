#pragma once

#include <vector>

#include "magnusforest/rational.hpp"

namespace magnusforest {

/// Square matrix of exact rationals, row-major.
class RatMatrix {
 public:
  explicit RatMatrix(int dim);
  static RatMatrix identity(int dim);

  int dim() const { return dim_; }
  Rational& at(int row, int col) { return data_[row * dim_ + col]; }
  const Rational& at(int row, int col) const { return data_[row * dim_ + col]; }

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, RatMatrix m);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  int dim_;
  std::vector<Rational> data_;
};

/// Square matrix of doubles, row-major.
class FloatMatrix {
 public:
  explicit FloatMatrix(int dim);
  static FloatMatrix identity(int dim);

  int dim() const { return dim_; }
  double& at(int row, int col) { return data_[row * dim_ + col]; }
  double at(int row, int col) const { return data_[row * dim_ + col]; }

  friend FloatMatrix operator+(const FloatMatrix& a, const FloatMatrix& b);
  friend FloatMatrix operator-(const FloatMatrix& a, const FloatMatrix& b);
  friend FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b);
  friend FloatMatrix operator*(double c, FloatMatrix m);

 private:
  int dim_;
  std::vector<double> data_;
};

FloatMatrix to_float(const RatMatrix& m);
double max_abs_norm(const FloatMatrix& m);

/// Matrix exponential by scaling and squaring with a Taylor kernel;
/// relative error below 1e-13 for inputs of norm at most 1.
FloatMatrix matrix_exp(const FloatMatrix& m);

}  // namespace magnusforest

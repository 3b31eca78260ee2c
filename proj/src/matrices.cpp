#include "magnusforest/matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace magnusforest {

RatMatrix::RatMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, Rational(0)) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

RatMatrix RatMatrix::identity(int dim) {
  RatMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix out(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

RatMatrix operator*(const Rational& c, RatMatrix m) {
  for (Rational& x : m.data_) x *= c;
  return m;
}

FloatMatrix::FloatMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, 0.0) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

FloatMatrix FloatMatrix::identity(int dim) {
  FloatMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

FloatMatrix operator+(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  FloatMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

FloatMatrix operator-(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  FloatMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  FloatMatrix out(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

FloatMatrix operator*(double c, FloatMatrix m) {
  for (double& x : m.data_) x *= c;
  return m;
}

FloatMatrix to_float(const RatMatrix& m) {
  FloatMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.at(i, j) = to_double(m.at(i, j));
  return out;
}

double max_abs_norm(const FloatMatrix& m) {
  double norm = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) norm = std::max(norm, std::abs(m.at(i, j)));
  return norm;
}

FloatMatrix matrix_exp(const FloatMatrix& m) {
  const int dim = m.dim();
  // Scale down until the norm is comfortably inside the Taylor radius.
  int squarings = 0;
  double norm = max_abs_norm(m) * dim;
  while (norm > 0.0625 && squarings < 60) {
    norm /= 2.0;
    ++squarings;
  }
  FloatMatrix scaled = std::ldexp(1.0, -squarings) * m;
  FloatMatrix result = FloatMatrix::identity(dim);
  FloatMatrix term = FloatMatrix::identity(dim);
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * (term * scaled);
    result = result + term;
    if (max_abs_norm(term) < 1e-19 * max_abs_norm(result)) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace magnusforest

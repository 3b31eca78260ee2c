#include "magnusforest/matrix_path.hpp"

#include <optional>
#include <stdexcept>

namespace magnusforest {

MatPolyPath::MatPolyPath(int dim)
    : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
  if (dim < 1) throw std::invalid_argument("path dimension must be >= 1");
}

MatPolyPath MatPolyPath::identity(int dim) {
  MatPolyPath m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Poly::constant(1);
  return m;
}

MatPolyPath MatPolyPath::scalar(const Poly& p) {
  MatPolyPath m(1);
  m.at(0, 0) = p;
  return m;
}

bool MatPolyPath::is_zero() const {
  for (const Poly& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

RatMatrix MatPolyPath::eval(const Rational& t) const {
  RatMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(i, j) = at(i, j).eval(t);
  return out;
}

MatPolyPath& MatPolyPath::operator+=(const MatPolyPath& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("path dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

MatPolyPath& MatPolyPath::operator-=(const MatPolyPath& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("path dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

MatPolyPath operator*(const MatPolyPath& a, const MatPolyPath& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("path dimension mismatch");
  MatPolyPath out(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const Poly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

MatPolyPath operator*(const Rational& c, MatPolyPath m) {
  for (Poly& p : m.entries_) p = c * p;
  return m;
}

MatPolyPath rb_integral(const MatPolyPath& f) {
  MatPolyPath out(f.dim());
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j) out.at(i, j) = f.at(i, j).antiderivative();
  return out;
}

MatPolyPath path_derivative(const MatPolyPath& f) {
  MatPolyPath out(f.dim());
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j) out.at(i, j) = f.at(i, j).derivative();
  return out;
}

MatPolyPath path_prec(const MatPolyPath& f, const MatPolyPath& g, const Rational& theta) {
  MatPolyPath out = f * rb_integral(g);
  if (theta != 0) out += theta * (f * g);
  return out;
}

MatPolyPath path_succ(const MatPolyPath& f, const MatPolyPath& g, const Rational& theta) {
  (void)theta;  // the ≻ half carries no weight term
  return rb_integral(f) * g;
}

MatPolyPath path_star(const MatPolyPath& f, const MatPolyPath& g, const Rational& theta) {
  return path_prec(f, g, theta) + path_succ(f, g, theta);
}

MatPolyPath path_prelie(const MatPolyPath& f, const MatPolyPath& g, const Rational& theta) {
  const MatPolyPath rf = rb_integral(f);
  MatPolyPath out = rf * g - g * rf;
  if (theta != 0) out -= theta * (g * f);
  return out;
}

namespace {

// nullopt stands for the formal dendriform unit, which is not itself a path.
std::optional<MatPolyPath> eval_tree_rec(const RootedTree& tree, const MatPolyPath& a) {
  if (tree.is_single_vertex()) return std::nullopt;
  const auto left = eval_tree_rec(butcher_left(tree), a);
  const auto rest = eval_tree_rec(butcher_rest(tree), a);
  // (E(t1) ≻ a): 1 ≻ a = a.
  MatPolyPath mid = left ? path_succ(*left, a) : a;
  // (...) ≺ E(t2): x ≺ 1 = x.
  if (rest) mid = path_prec(mid, *rest);
  return mid;
}

std::optional<MatPolyPath> eval_tree_mirrored_rec(const RootedTree& tree, const MatPolyPath& a) {
  if (tree.is_single_vertex()) return std::nullopt;
  const auto left = eval_tree_mirrored_rec(butcher_left(tree), a);
  const auto rest = eval_tree_mirrored_rec(butcher_rest(tree), a);
  MatPolyPath mid = left ? path_prec(a, *left) : a;
  if (rest) mid = path_succ(*rest, mid);
  return mid;
}

}  // namespace

MatPolyPath eval_tree_path(const RootedTree& tree, const MatPolyPath& a) {
  const auto result = eval_tree_rec(tree, a);
  return result ? *result : MatPolyPath::identity(a.dim());
}

MatPolyPath eval_tree_path_mirrored(const RootedTree& tree, const MatPolyPath& a) {
  const auto result = eval_tree_mirrored_rec(tree, a);
  return result ? *result : MatPolyPath::identity(a.dim());
}

MatPolyPath chen_reference_path(const MatPolyPath& a, int levels) {
  if (levels < 1) throw std::invalid_argument("chen_reference requires levels >= 1");
  const MatPolyPath one = MatPolyPath::identity(a.dim());
  MatPolyPath x = one;
  for (int k = 0; k < levels; ++k) x = one + rb_integral(a * x);
  return x;
}

RatMatrix chen_reference(const MatPolyPath& a, int levels, const Rational& s) {
  return chen_reference_path(a, levels).eval(s);
}

}  // namespace magnusforest

#include "magnusforest/magnus_numeric.hpp"

#include <stdexcept>
#include <vector>

#include "magnusforest/parallel.hpp"
#include "magnusforest/tree_series.hpp"

namespace magnusforest {

RatMatrix mps_omega_degree(const MatPolyPath& a, int degree, const Rational& s, int threads) {
  if (degree < 1) throw std::invalid_argument("mps_omega requires order >= 1");
  const std::vector<Permutation> perms = all_permutations(degree);
  std::vector<RatMatrix> slots(perms.size(), RatMatrix(a.dim()));
  parallel_fill(perms.size(), threads, [&](std::size_t i) {
    slots[i] = mps_coefficient(perms[i]) * eval_perm_integral(perms[i], a, s);
  });
  RatMatrix total(a.dim());
  for (const RatMatrix& m : slots) total += m;
  return total;
}

RatMatrix mps_omega(const MatPolyPath& a, int order, const Rational& s, int threads) {
  if (order < 1) throw std::invalid_argument("mps_omega requires order >= 1");
  RatMatrix total(a.dim());
  for (int n = 1; n <= order; ++n) total += mps_omega_degree(a, n, s, threads);
  return total;
}

namespace {

RatMatrix tree_route_degree(const MatPolyPath& a, int degree, const Rational& s, bool mirrored) {
  RatMatrix total(a.dim());
  for (const RootedTree& tree : enumerate_rooted(degree)) {
    const MatPolyPath evaluated =
        mirrored ? eval_tree_path_mirrored(tree, a) : eval_tree_path(tree, a);
    total += fixpoint_log_coefficient(tree) * rb_integral(evaluated).eval(s);
  }
  return total;
}

}  // namespace

RatMatrix closed_tree_omega_degree(const MatPolyPath& a, int degree, const Rational& s) {
  if (degree < 1) throw std::invalid_argument("closed_tree_omega requires order >= 1");
  return tree_route_degree(a, degree, s, false);
}

RatMatrix closed_tree_omega(const MatPolyPath& a, int order, const Rational& s) {
  if (order < 1) throw std::invalid_argument("closed_tree_omega requires order >= 1");
  RatMatrix total(a.dim());
  for (int n = 1; n <= order; ++n) total += closed_tree_omega_degree(a, n, s);
  return total;
}

RatMatrix closed_tree_omega_mirrored(const MatPolyPath& a, int order, const Rational& s) {
  if (order < 1) throw std::invalid_argument("closed_tree_omega requires order >= 1");
  RatMatrix total(a.dim());
  for (int n = 1; n <= order; ++n) total += tree_route_degree(a, n, s, true);
  return total;
}

namespace {

// Homogeneous components of the pre-Lie Magnus solution, by the number of
// path factors.
std::vector<MatPolyPath> prelie_omega_components(const MatPolyPath& a, int order) {
  std::vector<MatPolyPath> omega(order + 1, MatPolyPath(a.dim()));
  omega[1] = a;
  for (int n = 2; n <= order; ++n) {
    MatPolyPath part(a.dim());
    // L_{Ω'▷}^(m)(a): iterated[k] holds the degree-k part of the m-fold
    // application, built from components of degree < n only.
    std::vector<MatPolyPath> iterated(order + 1, MatPolyPath(a.dim()));
    iterated[1] = a;
    for (int m = 1; m < n; ++m) {
      std::vector<MatPolyPath> next(order + 1, MatPolyPath(a.dim()));
      for (int total = m + 1; total <= n; ++total)
        for (int k = 1; total - k >= m && k <= n - 1; ++k) {
          if (omega[k].is_zero() || iterated[total - k].is_zero()) continue;
          next[total] += path_prelie(omega[k], iterated[total - k]);
        }
      iterated = std::move(next);
      const Rational bm = bernoulli(m);
      if (bm != 0 && !iterated[n].is_zero())
        part += (bm / Rational(factorial(m))) * iterated[n];
    }
    omega[n] = std::move(part);
  }
  return omega;
}

}  // namespace

RatMatrix prelie_omega_numeric_degree(const MatPolyPath& a, int degree, const Rational& s) {
  if (degree < 1) throw std::invalid_argument("prelie_omega_numeric requires order >= 1");
  return rb_integral(prelie_omega_components(a, degree)[degree]).eval(s);
}

RatMatrix prelie_omega_numeric(const MatPolyPath& a, int order, const Rational& s) {
  if (order < 1) throw std::invalid_argument("prelie_omega_numeric requires order >= 1");
  const std::vector<MatPolyPath> components = prelie_omega_components(a, order);
  MatPolyPath sum(a.dim());
  for (int n = 1; n <= order; ++n) sum += components[n];
  return rb_integral(sum).eval(s);
}

std::pair<RatMatrix, RatMatrix> dsw_check(const MatPolyPath& a, int degree, const Rational& s,
                                          int threads) {
  if (degree < 2 || degree > 5)
    throw std::invalid_argument("dsw_check supports 2 <= n <= 5");
  const RatMatrix lhs = mps_omega_degree(a, degree, s, threads);
  const std::vector<Permutation> perms = all_permutations(degree);
  std::vector<RatMatrix> slots(perms.size(), RatMatrix(a.dim()));
  parallel_fill(perms.size(), threads, [&](std::size_t i) {
    const Rational weight = mps_coefficient(perms[i]) / Rational(degree);
    slots[i] = weight * eval_perm_bracket_integral(perms[i], a, s);
  });
  RatMatrix rhs(a.dim());
  for (const RatMatrix& m : slots) rhs += m;
  return {lhs, rhs};
}

double spitzer_check(const MatPolyPath& a, int order, const Rational& s, int threads) {
  const RatMatrix chen = chen_reference(a, order, s);
  const RatMatrix omega = mps_omega(a, order, s, threads);
  return max_abs_norm(to_float(chen) - matrix_exp(to_float(omega)));
}

MatPolyPath default_path() {
  MatPolyPath a(2);
  a.at(0, 1) = Poly::constant(1);
  a.at(1, 0) = Poly({Rational(-1), Rational(-1)});  // -1 - t
  return a;
}

}  // namespace magnusforest

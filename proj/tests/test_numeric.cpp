#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "magnusforest/magnus_numeric.hpp"
#include "magnusforest/serialization.hpp"
#include "magnusforest/tree_series.hpp"

using namespace magnusforest;

namespace {

MatPolyPath scalar_path(const Poly& p) { return MatPolyPath::scalar(p); }

MatPolyPath sample_path(int dim, int degree, int salt) {
  MatPolyPath a(dim);
  int k = salt;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::vector<Rational> coeffs;
      for (int d = 0; d <= degree; ++d) {
        k = (k * 13 + 5) % 17;
        coeffs.push_back(Rational(k - 8, (k % 3) + 1));
      }
      a.at(i, j) = Poly(std::move(coeffs));
    }
  return a;
}

}  // namespace

TEST_CASE("rb_integral is the weight-zero Rota-Baxter operator") {
  const MatPolyPath one = MatPolyPath::scalar(Poly::constant(1));
  CHECK(rb_integral(one) == MatPolyPath::scalar(Poly::variable()));

  for (int k = 0; k <= 4; ++k) {
    std::vector<Rational> mono(k + 1, Rational(0));
    mono[k] = 1;
    const MatPolyPath f = scalar_path(Poly(mono));
    std::vector<Rational> expect(k + 2, Rational(0));
    expect[k + 1] = Rational(1, k + 1);
    CHECK(rb_integral(f) == scalar_path(Poly(expect)));
  }

  for (int salt : {1, 2, 3}) {
    const MatPolyPath f = sample_path(2, 3, salt);
    const MatPolyPath g = sample_path(2, 3, salt + 10);
    CHECK(rb_integral(f) * rb_integral(g) ==
          rb_integral(rb_integral(f) * g + f * rb_integral(g)));
  }
}

TEST_CASE("path dendriform and pre-Lie products") {
  const MatPolyPath one = MatPolyPath::scalar(Poly::constant(1));
  CHECK(path_prec(one, one) == scalar_path(Poly::variable()));
  CHECK(path_succ(one, one) == scalar_path(Poly::variable()));

  const MatPolyPath f = sample_path(2, 2, 4);
  const MatPolyPath g = sample_path(2, 2, 9);
  const MatPolyPath rf = rb_integral(f);
  CHECK(path_prelie(f, g) == rf * g - g * rf);

  const MatPolyPath h = sample_path(2, 2, 14);
  CHECK(path_prec(path_prec(f, g), h) == path_prec(f, path_star(g, h)));
  CHECK(path_prec(path_succ(f, g), h) == path_succ(f, path_prec(g, h)));
  CHECK(path_succ(f, path_succ(g, h)) == path_succ(path_star(f, g), h));

  // weight terms: f < g at weight theta picks up theta f g
  const Rational theta(3, 2);
  CHECK(path_prec(f, g, theta) == f * rb_integral(g) + theta * (f * g));
  CHECK(path_star(f, g, theta) ==
        rb_integral(f) * g + f * rb_integral(g) + theta * (f * g));
  CHECK(path_prelie(f, g, theta) == rf * g - g * rf - theta * (g * f));

  const WeightedRBAdapter adapter{theta};
  CHECK(adapter.apply(f) == rf);
  CHECK(adapter.tilde(f) == Rational(-1) * (theta * f) - rf);

  CHECK_THROWS_AS(path_star(f, MatPolyPath(3)), std::invalid_argument);
}

TEST_CASE("tree evaluation on paths") {
  const MatPolyPath a = default_path();
  const MatPolyPath ra = rb_integral(a);
  CHECK(eval_tree_path(ladder(1), a) == a);
  CHECK(eval_tree_path(corolla(2), a) == a * ra);
  CHECK(eval_tree_path(ladder(2), a) == ra * a);
  CHECK(eval_tree_path(RootedTree(), a) == MatPolyPath::identity(2));

  // dendriform morphism property on small tree pairs
  for (int n1 = 1; n1 <= 2; ++n1)
    for (int n2 = 1; n1 + n2 <= 4; ++n2)
      for (const RootedTree& t1 : enumerate_rooted(n1))
        for (const RootedTree& t2 : enumerate_rooted(n2)) {
          const int trunc = n1 + n2;
          const auto evaluate = [&](const TreeSeries& s) {
            MatPolyPath out(a.dim());
            for (const auto& [tree, coeff] : s.terms())
              out += coeff * eval_tree_path(tree, a);
            return out;
          };
          const TreeSeries s1 = TreeSeries::basis(t1, trunc);
          const TreeSeries s2 = TreeSeries::basis(t2, trunc);
          CHECK(evaluate(star(s1, s2)) ==
                path_star(eval_tree_path(t1, a), eval_tree_path(t2, a)));
          CHECK(evaluate(prec(s1, s2)) ==
                path_prec(eval_tree_path(t1, a), eval_tree_path(t2, a)));
        }
}

TEST_CASE("simplex integrals of permutations") {
  // constant matrix C: sigma = (1) gives sC, sigma = (12) gives s^2 C^2 / 2
  MatPolyPath c(2);
  c.at(0, 0) = Poly::constant(1);
  c.at(0, 1) = Poly::constant(2);
  c.at(1, 0) = Poly::constant(Rational(-1, 2));
  const Rational s(1, 3);
  const RatMatrix cval = c.eval(0);

  CHECK(eval_perm_integral(Permutation({1}), c, s) == s * cval);
  CHECK(eval_perm_integral(Permutation({1, 2}), c, s) ==
        (s * s / Rational(2)) * (cval * cval));

  // scalar path: every permutation of S_n integrates to R(a)(s)^n / n!
  const MatPolyPath a = scalar_path(Poly({Rational(1), Rational(2), Rational(-1)}));
  const Rational ras = rb_integral(a).at(0, 0).eval(s);
  for (int n = 1; n <= 4; ++n) {
    Rational power = 1;
    for (int k = 0; k < n; ++k) power *= ras;
    const Rational expected = power / Rational(factorial(n));
    for (const Permutation& sigma : all_permutations(n))
      CHECK(eval_perm_integral(sigma, a, s).at(0, 0) == expected);
  }
}

TEST_CASE("mps_omega classical fixtures") {
  const MatPolyPath a = default_path();
  const Rational s(1, 4);
  const MatPolyPath ra = rb_integral(a);
  const MatPolyPath bracket = ra * a - a * ra;

  CHECK(mps_omega(a, 1, s) == ra.eval(s));
  CHECK(mps_omega_degree(a, 2, s) == Rational(-1, 2) * rb_integral(bracket).eval(s));

  const MatPolyPath rb2 = rb_integral(bracket);
  const RatMatrix omega3 = (Rational(1, 4) * rb_integral(rb2 * a - a * rb2) +
                            Rational(1, 12) * rb_integral(ra * bracket - bracket * ra))
                               .eval(s);
  CHECK(mps_omega_degree(a, 3, s) == omega3);

  // parallel reduction is bit-identical
  CHECK(mps_omega(a, 4, s, 4) == mps_omega(a, 4, s, 1));
}

TEST_CASE("tree and pre-Lie routes agree with the permutation route") {
  const MatPolyPath a = default_path();
  const Rational s(1, 4);

  CHECK(closed_tree_omega(a, 1, s) == rb_integral(a).eval(s));
  const MatPolyPath ra = rb_integral(a);
  const MatPolyPath bracket = ra * a - a * ra;
  CHECK(closed_tree_omega_degree(a, 2, s) ==
        Rational(-1, 2) * rb_integral(bracket).eval(s));
  CHECK(prelie_omega_numeric_degree(a, 2, s) ==
        Rational(-1, 2) * rb_integral(bracket).eval(s));

  for (int n = 1; n <= 5; ++n) {
    const RatMatrix mps = mps_omega_degree(a, n, s);
    CHECK(mps == closed_tree_omega_degree(a, n, s));
    CHECK(mps == prelie_omega_numeric_degree(a, n, s));
  }

  // commuting collapse
  const MatPolyPath sc = scalar_path(Poly({Rational(2), Rational(1)}));
  const Rational expected = rb_integral(sc).at(0, 0).eval(s);
  for (int n = 1; n <= 5; ++n) {
    CHECK(mps_omega(sc, n, s).at(0, 0) == expected);
    CHECK(closed_tree_omega(sc, n, s).at(0, 0) == expected);
    CHECK(prelie_omega_numeric(sc, n, s).at(0, 0) == expected);
  }
}

TEST_CASE("chen reference series") {
  const Rational s(1, 2);
  const MatPolyPath one = scalar_path(Poly::constant(1));
  Rational expected = 0, power = 1;
  for (int k = 0; k <= 5; ++k) {
    expected += power;
    power *= s / Rational(k + 1);
  }
  CHECK(chen_reference(one, 5, s).at(0, 0) == expected);

  // constant matrix: truncated exponential
  MatPolyPath c(2);
  c.at(0, 1) = Poly::constant(1);
  c.at(1, 0) = Poly::constant(-1);
  RatMatrix acc = RatMatrix::identity(2);
  RatMatrix term = RatMatrix::identity(2);
  const RatMatrix cval = c.eval(0);
  for (int k = 1; k <= 4; ++k) {
    term = (s / Rational(k)) * (term * cval);
    acc += term;
  }
  CHECK(chen_reference(c, 4, s) == acc);

  // X' - aX vanishes below the truncation level
  const MatPolyPath a = default_path();
  const MatPolyPath chen = chen_reference_path(a, 5);
  const MatPolyPath residual = path_derivative(chen) - a * chen;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 5 && k <= residual.at(i, j).degree(); ++k)
        CHECK(residual.at(i, j).coefficient(k) == 0);
}

TEST_CASE("matrix exponential") {
  FloatMatrix zero(3);
  const FloatMatrix ez = matrix_exp(zero);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ez.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));

  FloatMatrix diag(2);
  diag.at(0, 0) = 1.0;
  CHECK(matrix_exp(diag).at(0, 0) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));

  FloatMatrix nil(2);
  nil.at(0, 1) = 1.0;
  const FloatMatrix en = matrix_exp(nil);
  CHECK(en.at(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(en.at(0, 1) == doctest::Approx(1.0).epsilon(1e-14));

  // rotation generator: exp(theta J) = [[cos, sin], [-sin, cos]]
  FloatMatrix j(2);
  j.at(0, 1) = 0.7;
  j.at(1, 0) = -0.7;
  const FloatMatrix ej = matrix_exp(j);
  CHECK(ej.at(0, 0) == doctest::Approx(std::cos(0.7)).epsilon(1e-13));
  CHECK(ej.at(0, 1) == doctest::Approx(std::sin(0.7)).epsilon(1e-13));
  CHECK(ej.at(1, 0) == doctest::Approx(-std::sin(0.7)).epsilon(1e-13));
}

TEST_CASE("Dynkin-Specht-Wever bracketing") {
  const Rational s(1, 4);
  const MatPolyPath sc = scalar_path(Poly({Rational(1), Rational(1)}));
  const auto [slhs, srhs] = dsw_check(sc, 2, s);
  CHECK(slhs == RatMatrix(1));
  CHECK(srhs == RatMatrix(1));

  const MatPolyPath a = default_path();
  const MatPolyPath ra = rb_integral(a);
  const RatMatrix expected =
      Rational(-1, 2) * rb_integral(ra * a - a * ra).eval(s);
  const auto [lhs2, rhs2] = dsw_check(a, 2, s);
  CHECK(lhs2 == expected);
  CHECK(rhs2 == expected);

  const MatPolyPath b = sample_path(2, 1, 6);
  for (int n = 2; n <= 4; ++n) {
    const auto [lhs, rhs] = dsw_check(b, n, s);
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(dsw_check(a, 1, s), std::invalid_argument);
  CHECK_THROWS_AS(dsw_check(a, 6, s), std::invalid_argument);
}

TEST_CASE("Spitzer residuals") {
  // nilpotent constant path: exp is exact, residual vanishes at order 1
  MatPolyPath nil(2);
  nil.at(0, 1) = Poly::constant(1);
  CHECK(spitzer_check(nil, 1, Rational(1, 4)) == doctest::Approx(0.0).epsilon(1e-15));

  // scalar: residual is the exp truncation tail
  const MatPolyPath one = scalar_path(Poly::constant(1));
  const double r = spitzer_check(one, 3, Rational(1, 2));
  double tail = 0, power = 1, factorial_k = 1;
  for (int k = 1; k <= 3; ++k) {
    factorial_k *= k;
    power *= 0.5;
    tail += power / factorial_k;
  }
  CHECK(r == doctest::Approx(std::exp(0.5) - 1.0 - tail).epsilon(1e-10));

  // halving the interval divides the residual by about 2^{N+1}
  const MatPolyPath a = default_path();
  const double p =
      std::log2(spitzer_check(a, 3, Rational(1, 4)) / spitzer_check(a, 3, Rational(1, 8)));
  CHECK(std::abs(p - 4.0) <= 0.3);
}

TEST_CASE("default-path residual at order 4 stays under 1e-4") {
  const MatPolyPath a = default_path();
  const RatMatrix omega = mps_omega(a, 4, Rational(1, 4));
  const RatMatrix zref = chen_reference(a, 10, Rational(1, 4));
  CHECK(max_abs_norm(matrix_exp(to_float(omega)) - to_float(zref)) <= 1e-4);
}

TEST_CASE("JSON round trips") {
  const MatPolyPath a = default_path();
  CHECK(mat_poly_path_from_json(to_json(a)) == a);

  const TreeSeries series = closed_magnus_series(4);
  CHECK(tree_series_from_json(to_json(series)) == series);

  PermSeries ps(3);
  ps.add_constant(1);
  ps.add_term(Permutation({2, 1, 3}), Rational(-7, 3));
  CHECK(perm_series_from_json(to_json(ps)) == ps);

  const Json bad = Json{{"dim", 2}, {"entries", Json::array({Json::array()})}};
  CHECK_THROWS_AS(mat_poly_path_from_json(bad), std::invalid_argument);
}

TEST_CASE("series JSON is emitted in canonical tree order") {
  const std::string expected =
      R"({"terms":[{"den":"1","num":"1","tree":"[[]]"},)"
      R"({"den":"2","num":"1","tree":"[[[]]]"},)"
      R"({"den":"2","num":"-1","tree":"[[][]]"}],"trunc":2})";
  CHECK(to_json(closed_magnus_series(2)).dump() == expected);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magnusforest/tree_flows.hpp"
#include "magnusforest/tree_series.hpp"

using namespace magnusforest;

namespace {

TreeSeries basis_l(int n, int trunc) { return TreeSeries::basis(ladder(n), trunc); }

RootedTree branch(const RootedTree& t) {  // B+(t)
  return RootedTree(std::vector<RootedTree>{t});
}

// Small deterministic series for property checks.
TreeSeries sample_series(int trunc, int salt) {
  TreeSeries s(trunc);
  int k = salt;
  for (int n = 1; n <= trunc; ++n)
    for (const RootedTree& t : enumerate_rooted(n)) {
      k = (k * 31 + 7) % 11;
      if (k % 3 == 0) s.add_term(t, Rational(k - 5, (k % 4) + 1));
    }
  if (s.is_zero()) s.add_term(ladder(1), 1);
  return s;
}

}  // namespace

TEST_CASE("star products match the displayed sums") {
  const int trunc = 4;
  TreeSeries expected(trunc);
  expected.add_term(corolla(2), 1);
  expected.add_term(ladder(2), 1);
  CHECK(star(basis_l(1, trunc), basis_l(1, trunc)) == expected);

  TreeSeries expected12(trunc);
  expected12.add_term(RootedTree({RootedTree(), ladder(1)}), 1);
  expected12.add_term(branch(corolla(2)), 1);
  expected12.add_term(ladder(3), 1);
  CHECK(star(basis_l(1, trunc), basis_l(2, trunc)) == expected12);

  TreeSeries expected21(trunc);
  expected21.add_term(RootedTree({ladder(1), RootedTree()}), 1);
  expected21.add_term(ladder(3), 1);
  CHECK(star(basis_l(2, trunc), basis_l(1, trunc)) == expected21);
}

TEST_CASE("star unit and truncation rules") {
  const TreeSeries one = TreeSeries::unit(3);
  const TreeSeries x = sample_series(3, 2);
  CHECK(star(one, x) == x);
  CHECK(star(x, one) == x);
  CHECK_THROWS_AS(star(x, TreeSeries::unit(4)), std::invalid_argument);
  // grading: a degree-3 product truncates away at trunc 2
  const TreeSeries low = star(basis_l(2, 2), basis_l(1, 2));
  CHECK(low.is_zero());
}

TEST_CASE("ladder_star closed form equals the recursive product") {
  TreeSeries expected(2);
  expected.add_term(corolla(2), 1);
  expected.add_term(ladder(2), 1);
  CHECK(ladder_star(1, 1, 2) == expected);

  TreeSeries expected21(3);
  expected21.add_term(RootedTree({ladder(1), RootedTree()}), 1);
  expected21.add_term(ladder(3), 1);
  CHECK(ladder_star(2, 1, 3) == expected21);

  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      const int trunc = n + m;
      const TreeSeries closed = ladder_star(n, m, trunc);
      CHECK(closed == star(basis_l(n, trunc), basis_l(m, trunc)));
      CHECK(closed.terms().size() == static_cast<std::size_t>(m + 1));
    }
}

TEST_CASE("half products") {
  const int trunc = 2;
  // l1 < l1 = • butcher (• star l1) = • butcher l1 = c2, cross-checked
  // against prec + succ = star below.
  CHECK(prec(basis_l(1, trunc), basis_l(1, trunc)) ==
        TreeSeries::basis(left_butcher(RootedTree(), ladder(1)), trunc));
  CHECK(prec(basis_l(1, trunc), basis_l(1, trunc)) == TreeSeries::basis(corolla(2), trunc));
  CHECK(succ(basis_l(1, trunc), basis_l(1, trunc)) == TreeSeries::basis(ladder(2), trunc));

  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n1 + n2 <= 5; ++n2)
      for (const RootedTree& t1 : enumerate_rooted(n1))
        for (const RootedTree& t2 : enumerate_rooted(n2)) {
          const TreeSeries a = TreeSeries::basis(t1, n1 + n2);
          const TreeSeries b = TreeSeries::basis(t2, n1 + n2);
          CHECK(prec(a, b) + succ(a, b) == star(a, b));
        }

  const TreeSeries one = TreeSeries::unit(trunc);
  const TreeSeries x = sample_series(trunc, 5);
  CHECK(succ(one, x) == x);
  CHECK(prec(x, one) == x);
  CHECK(prec(one, x).is_zero());
  CHECK(succ(x, one).is_zero());
  CHECK_THROWS_AS(prec(one, one), std::invalid_argument);
  CHECK_THROWS_AS(succ(one, one), std::invalid_argument);
}

TEST_CASE("pre-Lie product") {
  const int trunc = 6;
  const TreeSeries a = basis_l(1, trunc);
  TreeSeries expected(trunc);
  expected.add_term(ladder(2), 1);
  expected.add_term(corolla(2), -1);
  CHECK(prelie(a, a) == expected);
  CHECK_THROWS_AS(prelie(TreeSeries::unit(trunc), a), std::invalid_argument);

  // left pre-Lie identity on basis triples of total degree <= 6
  for (int n1 = 1; n1 <= 2; ++n1)
    for (int n2 = 1; n2 <= 2; ++n2)
      for (int n3 = 1; n1 + n2 + n3 <= 6 && n3 <= 2; ++n3)
        for (const RootedTree& t1 : enumerate_rooted(n1))
          for (const RootedTree& t2 : enumerate_rooted(n2))
            for (const RootedTree& t3 : enumerate_rooted(n3)) {
              const int trunc3 = n1 + n2 + n3;
              const TreeSeries x = TreeSeries::basis(t1, trunc3);
              const TreeSeries y = TreeSeries::basis(t2, trunc3);
              const TreeSeries z = TreeSeries::basis(t3, trunc3);
              const TreeSeries lhs =
                  prelie(prelie(x, y), z) - prelie(x, prelie(y, z));
              const TreeSeries rhs =
                  prelie(prelie(y, x), z) - prelie(y, prelie(x, z));
              CHECK(lhs == rhs);
            }

  const TreeSeries b = basis_l(2, trunc);
  CHECK(prelie(a, b) - prelie(b, a) == Rational(-1) * (prelie(b, a) - prelie(a, b)));
}

TEST_CASE("exp and log") {
  const int trunc = 7;
  CHECK(log_star(TreeSeries::unit(trunc)).is_zero());

  // degree-2 part of log(1 + l1) is -1/2 l1*l1
  const TreeSeries a = basis_l(1, trunc);
  const TreeSeries logged = log_star(TreeSeries::unit(trunc) + a);
  CHECK(logged.degree_part(2) ==
        Rational(-1, 2) * star(a, a).degree_part(2));
  TreeSeries frozen2(trunc);
  frozen2.add_term(corolla(2), Rational(-1, 2));
  frozen2.add_term(ladder(2), Rational(-1, 2));
  CHECK(logged.degree_part(2) == frozen2);

  TreeSeries ladders = TreeSeries::unit(trunc);
  for (int n = 1; n <= trunc; ++n) ladders.add_term(ladder(n), 1);
  CHECK(exp_star(log_star(ladders)) == ladders);

  const TreeSeries x = sample_series(5, 9);
  CHECK(log_star(exp_star(x)) == x);
  CHECK_THROWS_AS(exp_star(TreeSeries::unit(5)), std::invalid_argument);
  CHECK_THROWS_AS(log_star(x), std::invalid_argument);
}

TEST_CASE("left fixpoint equation") {
  CHECK(solve_left_fixpoint(TreeSeries(3), 3) == TreeSeries::unit(3));

  TreeSeries expected = TreeSeries::unit(3);
  expected.add_term(ladder(1), 1);
  expected.add_term(corolla(2), 1);
  expected.add_term(corolla(3), 1);
  CHECK(solve_left_fixpoint(basis_l(1, 3), 3) == expected);

  for (int salt : {1, 4, 8}) {
    const TreeSeries a = sample_series(5, salt);
    const TreeSeries x = solve_left_fixpoint(a, 5);
    CHECK(x == TreeSeries::unit(5) + prec(a, x));
  }
}

TEST_CASE("leaf and descent Magnus coefficients") {
  CHECK(magnus_coefficient(ladder(1)) == 1);
  CHECK(magnus_coefficient(corolla(2)) == Rational(-1, 2));
  CHECK(magnus_coefficient(ladder(2)) == Rational(1, 2));
  CHECK(magnus_coefficient(ladder(3)) == Rational(1, 3));
  CHECK(magnus_coefficient(corolla(3)) == Rational(1, 3));
  for (const RootedTree& t : enumerate_rooted(3))
    if (leaf_count(t) == 2) CHECK(magnus_coefficient(t) == Rational(-1, 6));
  CHECK_THROWS_AS(magnus_coefficient(RootedTree()), std::invalid_argument);

  const BinaryTree leaf;
  const BinaryTree y = graft_vee(leaf, leaf);
  CHECK(descent_magnus_coefficient(y) == 1);
  CHECK(descent_magnus_coefficient(graft_vee(leaf, y)) == Rational(-1, 2));
  CHECK(descent_magnus_coefficient(graft_vee(y, leaf)) == Rational(1, 2));
  for (int n = 1; n <= 6; ++n)
    for (const BinaryTree& t : enumerate_binary(n))
      CHECK(descent_magnus_coefficient(t) == magnus_coefficient(rotate(t)));
}

TEST_CASE("closed Magnus series equals the ladder-log oracle") {
  TreeSeries expected1(1);
  expected1.add_term(ladder(1), 1);
  CHECK(closed_magnus_series(1) == expected1);

  TreeSeries expected2(2);
  expected2.add_term(ladder(1), 1);
  expected2.add_term(ladder(2), Rational(1, 2));
  expected2.add_term(corolla(2), Rational(-1, 2));
  CHECK(closed_magnus_series(2) == expected2);

  for (int n = 1; n <= 6; ++n)
    CHECK(closed_magnus_series(n) == ladder_log_oracle(n));
}

TEST_CASE("ladder-log oracle checks out against the proof-side computation") {
  const int trunc = 6;
  const TreeSeries oracle = ladder_log_oracle(trunc);

  TreeSeries deg2(trunc);
  deg2.add_term(ladder(2), Rational(1, 2));
  deg2.add_term(corolla(2), Rational(-1, 2));
  CHECK(oracle.degree_part(2) == deg2);

  for (int n = 1; n <= trunc; ++n) CHECK(oracle.coefficient(ladder(n)) == Rational(1, n));

  // beta-integral value for every tree
  for (int n = 1; n <= trunc; ++n)
    for (const RootedTree& t : enumerate_rooted(n)) {
      const int k = leaf_count(t);
      Rational expected(factorial(k - 1) * factorial(n - k), factorial(n));
      if ((k - 1) % 2 != 0) expected = -expected;
      CHECK(oracle.coefficient(t) == expected);
    }

  // The composition-sum route: degree-n part equals
  // sum_k -(-1)^k/k sum_{i1+...+ik=n} l(i1) * ... * l(ik).
  for (int n = 1; n <= 5; ++n) {
    TreeSeries by_compositions(trunc);
    std::vector<int> parts;
    const auto walk = [&](auto&& self, int remaining) -> void {
      if (remaining == 0) {
        TreeSeries mono = basis_l(parts[0], trunc);
        for (std::size_t i = 1; i < parts.size(); ++i)
          mono = star(mono, basis_l(parts[i], trunc));
        const int k = static_cast<int>(parts.size());
        const Rational c = (k % 2 == 0) ? Rational(-1, k) : Rational(1, k);
        by_compositions += c * mono;
        return;
      }
      for (int part = 1; part <= remaining; ++part) {
        parts.push_back(part);
        self(self, remaining - part);
        parts.pop_back();
      }
    };
    walk(walk, n);
    CHECK(by_compositions == oracle.degree_part(n));
  }
}

TEST_CASE("fixpoint log carries the per-degree sign flip") {
  const int trunc = 6;
  const TreeSeries logfix = log_star(solve_left_fixpoint(basis_l(1, trunc), trunc));
  for (int n = 1; n <= trunc; ++n)
    for (const RootedTree& t : enumerate_rooted(n)) {
      CHECK(logfix.coefficient(t) == fixpoint_log_coefficient(t));
      const Rational sign = (n - 1) % 2 == 0 ? 1 : -1;
      CHECK(fixpoint_log_coefficient(t) == sign * magnus_coefficient(t));
    }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(5) == 0);
  CHECK(bernoulli(7) == 0);
  CHECK(bernoulli(8) == Rational(-1, 30));
}

TEST_CASE("pre-Lie Magnus recursion") {
  const int trunc = 6;
  const TreeSeries a = basis_l(1, trunc);
  const TreeSeries omega = prelie_magnus_series(a, trunc);

  const TreeSeries aa = prelie(a, a);
  CHECK(omega.degree_part(1) == a);
  CHECK(omega.degree_part(2) == Rational(-1, 2) * aa);
  CHECK(omega.degree_part(3) ==
        Rational(1, 4) * prelie(aa, a) + Rational(1, 12) * prelie(a, aa));

  CHECK(omega == log_star(solve_left_fixpoint(a, trunc)));
  CHECK_THROWS_AS(prelie_magnus_series(TreeSeries::unit(trunc), trunc),
                  std::invalid_argument);
}

TEST_CASE("group of formal flows on tree series") {
  const int trunc = 6;
  const TreeSeries a = basis_l(1, trunc);

  const TreeSeries w = flow_w(a);
  CHECK(w.degree_part(1) == a);
  CHECK(w.degree_part(2) == Rational(1, 2) * prelie(a, a));
  CHECK(w.degree_part(3) ==
        Rational(1, 6) * prelie(a, prelie(a, a)));

  TreeSeries ab = basis_l(1, trunc);
  ab.add_term(ladder(2), 1);
  CHECK(flow_omega(flow_w(ab)) == ab);
  CHECK(flow_w(flow_omega(ab)) == ab);

  const TreeSeries b = sample_series(5, 3);
  CHECK(flow_omega(b) == prelie_magnus_series(b, 5));

  const int st = 5;
  const TreeSeries sa = basis_l(1, st);
  const TreeSeries sb = prec(sa, sa);
  const TreeSeries zero(st);
  CHECK(sharp(zero, sb) == sb);
  CHECK(sharp(sa, zero) == sa);
  CHECK(sharp(sa, sharp_inverse(sa)).is_zero());
  CHECK(sharp(sharp_inverse(sa), sa).is_zero());
  const TreeSeries sc = sample_series(st, 6);
  CHECK(sharp(sharp(sa, sb), sc) == sharp(sa, sharp(sb, sc)));
  CHECK(star(solve_left_fixpoint(sa, st), solve_left_fixpoint(sb, st)) ==
        solve_left_fixpoint(sharp(sa, sb), st));
}

namespace {

// Associative stand-in: t·Q[t]/(t^{trunc+1}) with the truncated product as
// the pre-Lie operation.
struct TruncPoly {
  int cap;
  std::vector<Rational> coeff;  // index = power of t

  explicit TruncPoly(int trunc_degree) : cap(trunc_degree), coeff(trunc_degree + 1, Rational(0)) {}
  int trunc() const { return cap; }
  bool is_zero() const {
    for (const Rational& c : coeff)
      if (c != 0) return false;
    return true;
  }
  bool augmentation_ideal() const { return coeff[0] == 0; }
  TruncPoly& operator+=(const TruncPoly& b) {
    for (int k = 0; k <= cap; ++k) coeff[k] += b.coeff[k];
    return *this;
  }
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) {
    for (int k = 0; k <= a.cap; ++k) a.coeff[k] -= b.coeff[k];
    return a;
  }
  friend TruncPoly operator*(const Rational& c, TruncPoly p) {
    for (Rational& x : p.coeff) x *= c;
    return p;
  }
  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;
};

TruncPoly prelie(const TruncPoly& a, const TruncPoly& b) {
  TruncPoly out(a.cap);
  for (int i = 0; i <= a.cap; ++i)
    for (int j = 0; i + j <= a.cap; ++j) out.coeff[i + j] += a.coeff[i] * b.coeff[j];
  return out;
}

}  // namespace

TEST_CASE("sharp with an associative stand-in is a |> b + a + b") {
  const int cap = 6;
  TruncPoly t(cap);
  t.coeff[1] = 1;
  TruncPoly u(cap);
  u.coeff[1] = Rational(1, 2);
  u.coeff[2] = Rational(-1, 3);

  CHECK(sharp(t, u) == prelie(t, u) + t + u);
  CHECK(sharp(u, t) == prelie(u, t) + u + t);

  // W(t) = e^t - 1 in this algebra
  const TruncPoly w = flow_w(t);
  Rational fact = 1;
  for (int k = 1; k <= cap; ++k) {
    fact *= k;
    CHECK(w.coeff[k] == 1 / fact);
  }
  // and the # inverse is the geometric series 1/(1+a) - 1
  const TruncPoly inv = sharp_inverse(t);
  for (int k = 1; k <= cap; ++k) CHECK(inv.coeff[k] == ((k % 2 == 0) ? 1 : -1));
  CHECK(sharp(t, inv).is_zero());
}

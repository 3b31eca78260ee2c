// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "magnusforest/magnus_numeric.hpp"
#include "magnusforest/perm_series.hpp"
#include "magnusforest/tree_flows.hpp"
#include "magnusforest/tree_series.hpp"

using namespace magnusforest;

namespace {

std::string g_cli;

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> body;
};

bool c1_catalan(std::string&) {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) {
    if (enumerate_binary(n).size() != static_cast<std::size_t>(expected[n])) return false;
    if (enumerate_rooted(n).size() != static_cast<std::size_t>(expected[n])) return false;
  }
  return true;
}

bool c2_rotation(std::string&) {
  for (int n = 0; n <= 8; ++n) {
    for (const BinaryTree& t : enumerate_binary(n))
      if (unrotate(rotate(t)) != t) return false;
    for (const RootedTree& t : enumerate_rooted(n))
      if (rotate(unrotate(t)) != t) return false;
  }
  for (int n1 = 0; n1 <= 7; ++n1)
    for (int n2 = 0; n1 + n2 + 1 <= 8; ++n2)
      for (const BinaryTree& t1 : enumerate_binary(n1))
        for (const BinaryTree& t2 : enumerate_binary(n2))
          if (rotate(graft_vee(t1, t2)) != left_butcher(rotate(t1), rotate(t2))) return false;
  return true;
}

bool c3_star_goldens(std::string&) {
  const int trunc = 3;
  auto l = [&](int n) { return TreeSeries::basis(ladder(n), trunc); };
  TreeSeries e11(trunc);
  e11.add_term(corolla(2), 1);
  e11.add_term(ladder(2), 1);
  if (star(l(1), l(1)) != e11) return false;

  TreeSeries e12(trunc);
  e12.add_term(RootedTree({RootedTree(), ladder(1)}), 1);
  e12.add_term(RootedTree(std::vector<RootedTree>{corolla(2)}), 1);
  e12.add_term(ladder(3), 1);
  if (star(l(1), l(2)) != e12) return false;

  TreeSeries e21(trunc);
  e21.add_term(RootedTree({ladder(1), RootedTree()}), 1);
  e21.add_term(ladder(3), 1);
  if (star(l(2), l(1)) != e21) return false;

  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      const int t = n + m;
      if (ladder_star(n, m, t) !=
          star(TreeSeries::basis(ladder(n), t), TreeSeries::basis(ladder(m), t)))
        return false;
    }
  return true;
}

bool c4_closed_magnus(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const bool ok = closed_magnus_series(7) == ladder_log_oracle(7);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << "degree 7, " << enumerate_rooted(7).size() << " trees at top degree, "
     << secs << "s";
  detail = os.str();
  return ok && secs < 60.0;
}

bool c5_descents(std::string&) {
  for (int n = 1; n <= 7; ++n)
    for (const BinaryTree& t : enumerate_binary(n))
      if (descent_magnus_coefficient(t) != magnus_coefficient(rotate(t))) return false;
  return true;
}

bool c6_prelie_magnus(std::string&) {
  const int trunc = 6;
  const TreeSeries a = TreeSeries::basis(ladder(1), trunc);
  const TreeSeries omega = prelie_magnus_series(a, trunc);
  if (omega != log_star(solve_left_fixpoint(a, trunc))) return false;
  const TreeSeries aa = prelie(a, a);
  if (omega.degree_part(2) != Rational(-1, 2) * aa) return false;
  return omega.degree_part(3) ==
         Rational(1, 4) * prelie(aa, a) + Rational(1, 12) * prelie(a, aa);
}

bool c7_flows(std::string&) {
  TreeSeries a6 = TreeSeries::basis(ladder(1), 6);
  a6.add_term(ladder(2), 1);
  a6.add_term(corolla(2), Rational(1, 2));
  if (flow_omega(flow_w(a6)) != a6) return false;
  if (flow_w(flow_omega(a6)) != a6) return false;

  const int t = 5;
  const TreeSeries a = TreeSeries::basis(ladder(1), t);
  const TreeSeries b = prec(a, a);
  TreeSeries c = TreeSeries::basis(corolla(2), t);
  c.add_term(ladder(3), Rational(-1, 3));
  if (sharp(sharp(a, b), c) != sharp(a, sharp(b, c))) return false;
  if (!sharp(a, sharp_inverse(a)).is_zero()) return false;
  if (!sharp(sharp_inverse(b), b).is_zero()) return false;
  return star(solve_left_fixpoint(a, t), solve_left_fixpoint(b, t)) ==
         solve_left_fixpoint(sharp(a, b), t);
}

bool c8_perm_layer(std::string&) {
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n1 + n2 <= 4; ++n2)
      for (int n3 = 1; n1 + n2 + n3 <= 5; ++n3) {
        const int trunc = n1 + n2 + n3;
        for (const Permutation& p1 : all_permutations(n1))
          for (const Permutation& p2 : all_permutations(n2))
            for (const Permutation& p3 : all_permutations(n3)) {
              const PermSeries a = PermSeries::basis(p1, trunc);
              const PermSeries b = PermSeries::basis(p2, trunc);
              const PermSeries c = PermSeries::basis(p3, trunc);
              if (perm_prec(perm_prec(a, b), c) != perm_prec(a, perm_star(b, c))) return false;
              if (perm_prec(perm_succ(a, b), c) != perm_succ(a, perm_prec(b, c))) return false;
              if (perm_succ(a, perm_succ(b, c)) != perm_succ(perm_star(a, b), c)) return false;
            }
      }
  for (int n = 1; n <= 6; ++n) {
    Integer total = 0;
    for (const BinaryTree& t : enumerate_binary(n)) total += Integer(psi_fiber(t).size());
    if (total != factorial(n)) return false;
    for (const Permutation& sigma : all_permutations(n))
      if (sigma.descent_count() != descent_count(psi(sigma))) return false;
  }
  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = 1; n1 + n2 <= 5; ++n2) {
      const int trunc = n1 + n2;
      for (const BinaryTree& t1 : enumerate_binary(n1))
        for (const BinaryTree& t2 : enumerate_binary(n2)) {
          const auto transport = [&](const TreeSeries& s) {
            PermSeries out(trunc);
            for (const auto& [tree, coeff] : s.terms())
              out += coeff * psi_star(unrotate(tree), trunc);
            return out;
          };
          const TreeSeries s1 = TreeSeries::basis(rotate(t1), trunc);
          const TreeSeries s2 = TreeSeries::basis(rotate(t2), trunc);
          if (transport(prec(s1, s2)) != perm_prec(psi_star(t1, trunc), psi_star(t2, trunc)))
            return false;
          if (transport(succ(s1, s2)) != perm_succ(psi_star(t1, trunc), psi_star(t2, trunc)))
            return false;
        }
    }
  return true;
}

bool c9_triple_route(std::string&) {
  const MatPolyPath a = default_path();
  const Rational s(1, 4);
  for (int n = 1; n <= 4; ++n) {
    const RatMatrix mps = mps_omega_degree(a, n, s);
    if (mps != closed_tree_omega_degree(a, n, s)) return false;
    if (mps != prelie_omega_numeric_degree(a, n, s)) return false;
  }
  return true;
}

bool c10_classical_terms(std::string&) {
  const MatPolyPath a = default_path();
  const Rational s(1, 4);
  const MatPolyPath ra = rb_integral(a);
  const MatPolyPath bracket = ra * a - a * ra;
  if (mps_omega_degree(a, 2, s) != Rational(-1, 2) * rb_integral(bracket).eval(s))
    return false;
  const MatPolyPath rb2 = rb_integral(bracket);
  const RatMatrix omega3 = (Rational(1, 4) * rb_integral(rb2 * a - a * rb2) +
                            Rational(1, 12) * rb_integral(ra * bracket - bracket * ra))
                               .eval(s);
  return mps_omega_degree(a, 3, s) == omega3;
}

bool c11_ode_order(std::string& detail) {
  const MatPolyPath a = default_path();
  std::ostringstream os;
  bool ok = true;
  for (int order = 3; order <= 4; ++order) {
    double residual[3];
    const Rational points[3] = {Rational(1, 4), Rational(1, 8), Rational(1, 16)};
    for (int i = 0; i < 3; ++i) {
      const RatMatrix omega = mps_omega(a, order, points[i]);
      const RatMatrix zref = chen_reference(a, order + 6, points[i]);
      residual[i] = max_abs_norm(matrix_exp(to_float(omega)) - to_float(zref));
    }
    const double p1 = std::log2(residual[0] / residual[1]);
    const double p2 = std::log2(residual[1] / residual[2]);
    const double want = order + 1;
    const bool in_band = std::abs(p1 - want) <= 0.3 && std::abs(p2 - want) <= 0.3;
    ok = ok && in_band;
    os << "N=" << order << " measured " << p1 << ", " << p2 << " (band " << want
       << "±0.3)" << (in_band ? "" : " OUT") << "; ";
  }
  detail = os.str() + "see decisions ledger: polynomial-path commutators decay one order faster";
  return ok;
}

bool c12_dsw(std::string&) {
  const MatPolyPath a = default_path();
  const Rational s(1, 4);
  for (int n = 2; n <= 4; ++n) {
    const auto [lhs, rhs] = dsw_check(a, n, s);
    if (lhs != rhs) return false;
  }
  return true;
}

bool c13_commuting(std::string&) {
  MatPolyPath a(1);
  a.at(0, 0) = Poly({Rational(1), Rational(1, 3)});
  const Rational s(1, 4);
  const Rational expected = rb_integral(a).at(0, 0).eval(s);
  for (int n = 1; n <= 5; ++n)
    if (mps_omega(a, n, s).at(0, 0) != expected) return false;
  for (int n = 2; n <= 4; ++n) {
    Rational sum = 0;
    for (const Permutation& sigma : all_permutations(n)) sum += mps_coefficient(sigma);
    if (sum != 0) return false;
  }
  return true;
}

struct CliRun {
  int exit_code;
  std::string output;
};

CliRun run_cli(const std::string& env, const std::string& args) {
  const std::string command = env + " '" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
  return {WEXITSTATUS(pclose(pipe)), output};
}

bool c14_cli_determinism(std::string& detail) {
  const CliRun base = run_cli("", "verify all --degree 5");
  if (base.exit_code != 0) {
    detail = "verify all exited " + std::to_string(base.exit_code);
    return false;
  }
  const CliRun repeat = run_cli("", "verify all --degree 5");
  const CliRun one_thread = run_cli("MAGNUS_FOREST_THREADS=1", "verify all --degree 5 --parallel");
  const CliRun four_threads = run_cli("MAGNUS_FOREST_THREADS=4", "verify all --degree 5 --parallel");
  if (repeat.exit_code != 0 || one_thread.exit_code != 0 || four_threads.exit_code != 0) {
    detail = "re-runs exited nonzero";
    return false;
  }
  if (base.output != repeat.output || base.output != one_thread.output ||
      base.output != four_threads.output) {
    detail = "outputs differ across runs or thread counts";
    return false;
  }
  return !base.output.empty();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];

  std::vector<Criterion> criteria = {
      {1, "catalan-counts", c1_catalan},
      {2, "rotation-bijection", c2_rotation},
      {3, "star-golden-values", c3_star_goldens},
      {4, "closed-magnus-vs-oracle-deg7", c4_closed_magnus},
      {5, "descent-coefficients-deg7", c5_descents},
      {6, "prelie-magnus-logarithm", c6_prelie_magnus},
      {7, "formal-flows", c7_flows},
      {8, "permutation-layer", c8_perm_layer},
      {9, "triple-route-agreement", c9_triple_route},
      {10, "classical-lambda-fixtures", c10_classical_terms},
      {11, "ode-order-of-accuracy", c11_ode_order},
      {12, "dynkin-specht-wever", c12_dsw},
      {13, "commuting-collapse", c13_commuting},
      {14, "cli-determinism", c14_cli_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (c.number == 14 && g_cli.empty()) {
      std::cout << "SKIP  14 cli-determinism (no CLI path given)\n";
      ++failures;
      continue;
    }
    std::string detail;
    bool pass = false;
    try {
      pass = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %2d %s%s%s\n", pass ? "PASS" : "FAIL", c.number, c.name.c_str(),
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!pass) ++failures;
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

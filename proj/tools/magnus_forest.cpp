#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "magnusforest/magnus_numeric.hpp"
#include "magnusforest/parallel.hpp"
#include "magnusforest/perm_series.hpp"
#include "magnusforest/serialization.hpp"
#include "magnusforest/tree_series.hpp"
#include "magnusforest/verify.hpp"

namespace {

using namespace magnusforest;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kTreeDegreeCap = 8;
constexpr int kPermDegreeCap = 6;
constexpr int kMagnusOrderCap = 5;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string float_matrix_text(const FloatMatrix& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    out += "  ";
    for (int j = 0; j < m.dim(); ++j) {
      out += fmt_double(m.at(i, j));
      if (j + 1 < m.dim()) out += "  ";
    }
    out += "\n";
  }
  return out;
}

std::string rat_matrix_text(const RatMatrix& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    out += "  ";
    for (int j = 0; j < m.dim(); ++j) {
      out += rational_to_string(m.at(i, j));
      if (j + 1 < m.dim()) out += "  ";
    }
    out += "\n";
  }
  return out;
}

Json float_matrix_json(const FloatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatPolyPath resolve_path(const std::string& spec) {
  if (spec.empty() || spec == "default") return default_path();
  return load_path_file(spec);
}

void enforce_cap(int degree, int cap, bool unsafe, const std::string& what) {
  if (degree > cap && !unsafe)
    throw CapExceeded(what + " degree " + std::to_string(degree) + " exceeds the cap of " +
                      std::to_string(cap) + " (pass --unsafe-degree to override)");
}

// ------------------------------------------------------------------ trees --

int run_trees(const std::string& kind, int degree, const std::string& format, bool unsafe) {
  enforce_cap(degree, kTreeDegreeCap, unsafe, "tree");
  if (format == "json") {
    Json rows = Json::array();
    if (kind == "binary") {
      for (const BinaryTree& t : enumerate_binary(degree))
        rows.push_back({{"tree", t.repr()},
                        {"degree", t.degree()},
                        {"leaves", t.leaves()},
                        {"descents", descent_count(t)},
                        {"rotate", rotate(t).repr()}});
    } else {
      for (const RootedTree& t : enumerate_rooted(degree))
        rows.push_back({{"tree", t.repr()},
                        {"degree", t.degree()},
                        {"leaves", leaf_count(t)},
                        {"unrotate", unrotate(t).repr()}});
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  const bool csv = format == "csv";
  if (csv)
    std::cout << (kind == "binary" ? "tree,degree,leaves,descents,rotate\n"
                                   : "tree,degree,leaves,unrotate\n");
  if (kind == "binary") {
    for (const BinaryTree& t : enumerate_binary(degree)) {
      if (csv)
        std::cout << "\"" << t.repr() << "\"," << t.degree() << "," << t.leaves() << ","
                  << descent_count(t) << "," << rotate(t).repr() << "\n";
      else
        std::cout << t.repr() << "  degree=" << t.degree() << " leaves=" << t.leaves()
                  << " descents=" << descent_count(t) << " rotate=" << rotate(t).repr() << "\n";
    }
  } else {
    for (const RootedTree& t : enumerate_rooted(degree)) {
      if (csv)
        std::cout << t.repr() << "," << t.degree() << "," << leaf_count(t) << ",\""
                  << unrotate(t).repr() << "\"\n";
      else
        std::cout << t.repr() << "  degree=" << t.degree() << " leaves=" << leaf_count(t)
                  << " unrotate=" << unrotate(t).repr() << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------- coefficients --

int run_coefficients(int degree, const std::string& format, bool unsafe) {
  enforce_cap(degree, kTreeDegreeCap, unsafe, "tree");
  enforce_cap(degree, kPermDegreeCap, unsafe, "permutation");
  const int perm_degree = degree;

  struct Row {
    std::string table, object;
    int statistic;
    Rational coefficient;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= degree; ++n)
    for (const RootedTree& t : enumerate_rooted(n)) {
      rows.push_back({"theorem", t.repr(), leaf_count(t), magnus_coefficient(t)});
      rows.push_back({"fixpoint-log", t.repr(), leaf_count(t), fixpoint_log_coefficient(t)});
    }
  for (int n = 1; n <= perm_degree; ++n)
    for (const Permutation& sigma : all_permutations(n)) {
      std::string word;
      for (int v : sigma.word()) word += std::to_string(v);
      rows.push_back({"permutation", "(" + word + ")", sigma.descent_count(),
                      mps_coefficient(sigma)});
    }

  if (format == "json") {
    Json out = Json::array();
    for (const Row& row : rows)
      out.push_back({{"table", row.table},
                     {"object", row.object},
                     {"statistic", row.statistic},
                     {"coefficient", rational_to_string(row.coefficient)}});
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "table,object,statistic,coefficient\n";
    for (const Row& row : rows)
      std::cout << row.table << ",\"" << row.object << "\"," << row.statistic << ","
                << rational_to_string(row.coefficient) << "\n";
  } else {
    for (const Row& row : rows)
      std::cout << row.table << "  " << row.object << "  stat=" << row.statistic
                << "  coeff=" << rational_to_string(row.coefficient) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify --

int run_verify(const std::string& suite, int degree, const std::string& path_spec,
               const std::string& format, bool parallel) {
  const MatPolyPath path = resolve_path(path_spec);
  const Report report = run_verify_suite(suite, degree, path, resolve_thread_count(parallel));
  if (format == "json") {
    Json checks = Json::array();
    for (const CheckResult& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << Json{{"suite", suite}, {"degree", degree}, {"checks", checks},
                      {"pass", report.all_pass()}}
                     .dump(2)
              << "\n";
  } else if (format == "csv") {
    std::cout << "name,pass,detail\n";
    for (const CheckResult& c : report.checks)
      std::cout << c.name << "," << (c.pass ? "1" : "0") << ",\"" << c.detail << "\"\n";
  } else {
    std::cout << render_report(report);
  }
  return report.all_pass() ? 0 : kExitVerifyFailure;
}

// ---------------------------------------------------------------- magnus --

int run_magnus(const std::string& path_spec, int order, const std::string& s_text,
               const std::string& format, bool parallel, bool unsafe) {
  if (order > kMagnusOrderCap && !unsafe)
    throw CapExceeded("magnus order " + std::to_string(order) + " exceeds the cap of " +
                      std::to_string(kMagnusOrderCap) +
                      " (the permutation route sums n! integrals; pass --unsafe-degree)");
  const MatPolyPath a = resolve_path(path_spec);
  const Rational s = rational_from_string(s_text);
  if (s < 0) throw std::invalid_argument("evaluation point s must be >= 0");
  const int threads = resolve_thread_count(parallel);

  const RatMatrix omega = mps_omega(a, order, s, threads);
  const FloatMatrix exp_omega = matrix_exp(to_float(omega));
  const RatMatrix chen = chen_reference(a, order + 6, s);
  const double residual = max_abs_norm(exp_omega - to_float(chen));

  if (format == "json") {
    std::cout << Json{{"order", order},
                      {"s", rational_to_string(s)},
                      {"omega", to_json(omega)},
                      {"exp_omega", float_matrix_json(exp_omega)},
                      {"chen_reference", to_json(chen)},
                      {"residual_inf", residual}}
                     .dump(2)
              << "\n";
  } else if (format == "csv") {
    std::cout << "matrix,row,col,value\n";
    for (int i = 0; i < omega.dim(); ++i)
      for (int j = 0; j < omega.dim(); ++j)
        std::cout << "omega," << i << "," << j << "," << rational_to_string(omega.at(i, j))
                  << "\n";
    for (int i = 0; i < exp_omega.dim(); ++i)
      for (int j = 0; j < exp_omega.dim(); ++j)
        std::cout << "exp_omega," << i << "," << j << "," << fmt_double(exp_omega.at(i, j))
                  << "\n";
    for (int i = 0; i < chen.dim(); ++i)
      for (int j = 0; j < chen.dim(); ++j)
        std::cout << "chen," << i << "," << j << "," << rational_to_string(chen.at(i, j))
                  << "\n";
    std::cout << "residual,0,0," << fmt_double(residual) << "\n";
  } else {
    std::cout << "omega (exact, order " << order << ", s = " << rational_to_string(s) << "):\n"
              << rat_matrix_text(omega);
    std::cout << "exp(omega):\n" << float_matrix_text(exp_omega);
    std::cout << "chen reference (exact, " << order + 6 << " levels):\n"
              << rat_matrix_text(chen);
    std::cout << "residual_inf = " << fmt_double(residual) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magnus-forest: Magnus expansion on planar trees, permutations and matrix paths"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string kind = "rooted";
  int trees_degree = 4;
  int coeff_degree = 3;
  int verify_degree = 5;
  int magnus_order = 4;
  bool unsafe = false;
  bool parallel = false;
  std::string suite = "all";
  std::string path_spec = "default";
  std::string s_text = "1/4";

  CLI::App* trees = app.add_subcommand("trees", "list trees of a given degree");
  trees->add_option("--kind", kind, "binary or rooted")
      ->check(CLI::IsMember({"binary", "rooted"}));
  trees->add_option("--degree", trees_degree, "tree degree")->check(CLI::NonNegativeNumber);
  trees->add_flag("--unsafe-degree", unsafe, "override the safety cap");

  CLI::App* coeffs = app.add_subcommand("coefficients", "Magnus coefficient tables");
  coeffs->add_option("--degree", coeff_degree, "maximum degree")->check(CLI::PositiveNumber);
  coeffs->add_flag("--unsafe-degree", unsafe, "override the safety caps");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("SUITE", suite, "axioms | theorem | psi | flows | numeric | all")
      ->check(CLI::IsMember({"axioms", "theorem", "psi", "flows", "numeric", "all"}));
  verify->add_option("--suite", suite, "alias for the positional suite name")
      ->check(CLI::IsMember({"axioms", "theorem", "psi", "flows", "numeric", "all"}))
      ->excludes(verify->get_option("SUITE"));
  verify->add_option("--degree", verify_degree, "maximum exhaustive degree")
      ->check(CLI::PositiveNumber);
  verify->add_option("--path", path_spec, "path JSON file or 'default'");
  verify->add_flag("--parallel", parallel, "parallelize permutation integrals");

  CLI::App* magnus = app.add_subcommand("magnus", "numeric Magnus truncation on a matrix path");
  magnus->add_option("--path", path_spec, "path JSON file or 'default'");
  magnus->add_option("--degree", magnus_order, "truncation order N")->check(CLI::PositiveNumber);
  magnus->add_option("--s", s_text, "evaluation point, rational p/q");
  magnus->add_flag("--parallel", parallel, "parallelize permutation integrals");
  magnus->add_flag("--unsafe-degree", unsafe, "override the order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (trees->parsed()) return run_trees(kind, trees_degree, format, unsafe);
    if (coeffs->parsed()) return run_coefficients(coeff_degree, format, unsafe);
    if (verify->parsed()) return run_verify(suite, verify_degree, path_spec, format, parallel);
    if (magnus->parsed())
      return run_magnus(path_spec, magnus_order, s_text, format, parallel, unsafe);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

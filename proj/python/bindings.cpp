#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "magnusforest/magnus_numeric.hpp"
#include "magnusforest/parallel.hpp"
#include "magnusforest/perm_series.hpp"
#include "magnusforest/serialization.hpp"
#include "magnusforest/tree_flows.hpp"
#include "magnusforest/tree_series.hpp"
#include "magnusforest/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact rationals cross the boundary as fractions.Fraction (ints load too).
template <>
struct type_caster<magnusforest::Rational> {
  PYBIND11_TYPE_CASTER(magnusforest::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr())) return false;  // floats are not exact
    try {
      const std::string num = str(src.attr("numerator"));
      const std::string den = str(src.attr("denominator"));
      value = magnusforest::Rational(magnusforest::Integer(num), magnusforest::Integer(den));
      return true;
    } catch (const error_already_set&) {
      PyErr_Clear();
      return false;
    } catch (const std::exception&) {
      return false;
    }
  }

  static handle cast(const magnusforest::Rational& src, return_value_policy, handle) {
    object big_int = reinterpret_steal<object>(
        PyLong_FromString(numerator(src).str().c_str(), nullptr, 10));
    object big_den = reinterpret_steal<object>(
        PyLong_FromString(denominator(src).str().c_str(), nullptr, 10));
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(big_int, big_den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace magnusforest;

using SeriesDict = std::map<std::string, Rational>;
using PermDict = std::map<std::vector<int>, Rational>;
using PathData = std::vector<std::vector<std::vector<Rational>>>;
using RatMatrixData = std::vector<std::vector<Rational>>;
using FloatMatrixData = std::vector<std::vector<double>>;

TreeSeries series_in(const SeriesDict& terms, int trunc) {
  TreeSeries s(trunc);
  for (const auto& [tree, coeff] : terms) s.add_term(parse_rooted(tree), coeff);
  return s;
}

SeriesDict series_out(const TreeSeries& s) {
  SeriesDict out;
  for (const auto& [tree, coeff] : s.terms()) out[tree.repr()] = coeff;
  return out;
}

PermSeries perm_series_in(const PermDict& terms, int trunc) {
  PermSeries s(trunc);
  for (const auto& [word, coeff] : terms) {
    if (word.empty())
      s.add_constant(coeff);
    else
      s.add_term(Permutation(word), coeff);
  }
  return s;
}

PermDict perm_series_out(const PermSeries& s) {
  PermDict out;
  if (s.constant_term() != 0) out[{}] = s.constant_term();
  for (const auto& [sigma, coeff] : s.terms()) out[sigma.word()] = coeff;
  return out;
}

MatPolyPath path_in(const PathData& entries) {
  const int dim = static_cast<int>(entries.size());
  MatPolyPath a(dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(entries[i].size()) != dim)
      throw std::invalid_argument("path entries must form a square matrix");
    for (int j = 0; j < dim; ++j) a.at(i, j) = Poly(entries[i][j]);
  }
  return a;
}

PathData path_out(const MatPolyPath& a) {
  PathData out(a.dim(), std::vector<std::vector<Rational>>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Poly& p = a.at(i, j);
      out[i][j] = p.is_zero() ? std::vector<Rational>{Rational(0)} : p.coeffs();
    }
  return out;
}

RatMatrixData matrix_out(const RatMatrix& m) {
  RatMatrixData out(m.dim(), std::vector<Rational>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out[i][j] = m.at(i, j);
  return out;
}

FloatMatrix float_matrix_in(const FloatMatrixData& rows) {
  const int dim = static_cast<int>(rows.size());
  FloatMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim)
      throw std::invalid_argument("matrix must be square");
    for (int j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

FloatMatrixData float_matrix_out(const FloatMatrix& m) {
  FloatMatrixData out(m.dim(), std::vector<double>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out[i][j] = m.at(i, j);
  return out;
}

TreeFamily family_from_name(const std::string& name) {
  if (name == "ladder") return TreeFamily::Ladder;
  if (name == "corolla") return TreeFamily::Corolla;
  if (name == "left_comb") return TreeFamily::LeftComb;
  if (name == "right_comb") return TreeFamily::RightComb;
  throw std::invalid_argument("unknown family: " + name);
}

ShuffleKind shuffle_kind_from_name(const std::string& name) {
  if (name == "all") return ShuffleKind::All;
  if (name == "sh1") return ShuffleKind::Sh1;
  if (name == "sh2") return ShuffleKind::Sh2;
  throw std::invalid_argument("unknown shuffle kind: " + name);
}

SplitConvention convention_from_name(const std::string& name) {
  if (name == "first") return SplitConvention::FirstTermPrec;
  if (name == "second") return SplitConvention::SecondTermPrec;
  throw std::invalid_argument("unknown split convention: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Magnus expansion on planar trees, permutations and matrix paths";

  // ---- trees ----
  m.def("catalan", [](int n) { return py::cast(Rational(catalan(n))).attr("numerator"); });
  m.def("enumerate_trees", [](const std::string& kind, int degree) {
    std::vector<std::string> out;
    if (kind == "binary")
      for (const BinaryTree& t : enumerate_binary(degree)) out.push_back(t.repr());
    else if (kind == "rooted")
      for (const RootedTree& t : enumerate_rooted(degree)) out.push_back(t.repr());
    else
      throw std::invalid_argument("kind must be 'binary' or 'rooted'");
    return out;
  });
  m.def("family", [](const std::string& name, int n) {
    switch (family_from_name(name)) {
      case TreeFamily::Ladder: return ladder(n).repr();
      case TreeFamily::Corolla: return corolla(n).repr();
      case TreeFamily::LeftComb: return left_comb(n).repr();
      default: return right_comb(n).repr();
    }
  });
  m.def("graft_vee", [](const std::string& t1, const std::string& t2) {
    return graft_vee(parse_binary(t1), parse_binary(t2)).repr();
  });
  m.def("left_butcher", [](const std::string& t, const std::string& u) {
    return left_butcher(parse_rooted(t), parse_rooted(u)).repr();
  });
  m.def("rotate", [](const std::string& t) { return rotate(parse_binary(t)).repr(); });
  m.def("unrotate", [](const std::string& t) { return unrotate(parse_rooted(t)).repr(); });
  m.def("leaf_count", [](const std::string& t) { return leaf_count(parse_rooted(t)); });
  m.def("descent_count", [](const std::string& t) { return descent_count(parse_binary(t)); });
  m.def("tree_degree", [](const std::string& t) {
    return t.front() == '[' ? parse_rooted(t).degree() : parse_binary(t).degree();
  });
  m.def("tree_composition", [](const std::string& t) {
    return tree_composition(parse_rooted(t)).parts();
  });

  // ---- free dendriform algebra ----
  m.def("star", [](const SeriesDict& x, const SeriesDict& y, int trunc) {
    return series_out(star(series_in(x, trunc), series_in(y, trunc)));
  });
  m.def(
      "prec",
      [](const SeriesDict& x, const SeriesDict& y, int trunc, const std::string& convention) {
        return series_out(
            prec(series_in(x, trunc), series_in(y, trunc), convention_from_name(convention)));
      },
      py::arg("x"), py::arg("y"), py::arg("trunc"), py::arg("convention") = "first");
  m.def(
      "succ",
      [](const SeriesDict& x, const SeriesDict& y, int trunc, const std::string& convention) {
        return series_out(
            succ(series_in(x, trunc), series_in(y, trunc), convention_from_name(convention)));
      },
      py::arg("x"), py::arg("y"), py::arg("trunc"), py::arg("convention") = "first");
  m.def("prelie", [](const SeriesDict& x, const SeriesDict& y, int trunc) {
    return series_out(prelie(series_in(x, trunc), series_in(y, trunc)));
  });
  m.def("exp_star", [](const SeriesDict& x, int trunc) {
    return series_out(exp_star(series_in(x, trunc)));
  });
  m.def("log_star", [](const SeriesDict& u, int trunc) {
    return series_out(log_star(series_in(u, trunc)));
  });
  m.def("solve_left_fixpoint", [](const SeriesDict& a, int trunc) {
    return series_out(solve_left_fixpoint(series_in(a, trunc), trunc));
  });
  m.def("ladder_star", [](int n, int mm, int trunc) {
    return series_out(ladder_star(n, mm, trunc));
  });
  m.def("magnus_coefficient",
        [](const std::string& tree) { return magnus_coefficient(parse_rooted(tree)); });
  m.def("fixpoint_log_coefficient",
        [](const std::string& tree) { return fixpoint_log_coefficient(parse_rooted(tree)); });
  m.def("descent_magnus_coefficient",
        [](const std::string& tree) { return descent_magnus_coefficient(parse_binary(tree)); });
  m.def("closed_magnus_series", [](int trunc) { return series_out(closed_magnus_series(trunc)); });
  m.def("ladder_log_oracle", [](int trunc) { return series_out(ladder_log_oracle(trunc)); });
  m.def("bernoulli", [](int n) { return bernoulli(n); });
  m.def("prelie_magnus_series", [](const SeriesDict& a, int trunc) {
    return series_out(prelie_magnus_series(series_in(a, trunc), trunc));
  });
  m.def("flow_w", [](const SeriesDict& a, int trunc) {
    return series_out(flow_w(series_in(a, trunc)));
  });
  m.def("flow_omega", [](const SeriesDict& b, int trunc) {
    return series_out(flow_omega(series_in(b, trunc)));
  });
  m.def("sharp", [](const SeriesDict& a, const SeriesDict& b, int trunc) {
    return series_out(sharp(series_in(a, trunc), series_in(b, trunc)));
  });
  m.def("sharp_inverse", [](const SeriesDict& a, int trunc) {
    return series_out(sharp_inverse(series_in(a, trunc)));
  });

  // ---- permutations ----
  m.def("shuffle_set", [](int n, int mm, const std::string& kind) {
    std::vector<std::vector<int>> out;
    for (const Permutation& p : shuffle_set(n, mm, shuffle_kind_from_name(kind)))
      out.push_back(p.word());
    return out;
  });
  m.def("standardize", [](const std::vector<int>& word) { return standardize(word).word(); });
  m.def("descent_count_perm",
        [](const std::vector<int>& word) { return Permutation(word).descent_count(); });
  m.def("mps_coefficient",
        [](const std::vector<int>& word) { return mps_coefficient(Permutation(word)); });
  m.def("psi", [](const std::vector<int>& word) { return psi(Permutation(word)).repr(); });
  m.def("psi_fiber", [](const std::string& tree) {
    std::vector<std::vector<int>> out;
    for (const Permutation& p : psi_fiber(parse_binary(tree))) out.push_back(p.word());
    return out;
  });
  m.def("perm_to_leveled", [](const std::vector<int>& word) {
    const LeveledBinaryTree lt = perm_to_leveled(Permutation(word));
    return py::make_tuple(lt.tree().repr(), lt.levels());
  });
  m.def("leveled_to_perm", [](const std::string& tree, const std::vector<int>& levels) {
    return leveled_to_perm(LeveledBinaryTree(parse_binary(tree), levels)).word();
  });
  m.def("perm_star", [](const PermDict& x, const PermDict& y, int trunc) {
    return perm_series_out(perm_star(perm_series_in(x, trunc), perm_series_in(y, trunc)));
  });
  m.def("perm_prec", [](const PermDict& x, const PermDict& y, int trunc) {
    return perm_series_out(perm_prec(perm_series_in(x, trunc), perm_series_in(y, trunc)));
  });
  m.def("perm_succ", [](const PermDict& x, const PermDict& y, int trunc) {
    return perm_series_out(perm_succ(perm_series_in(x, trunc), perm_series_in(y, trunc)));
  });
  m.def("psi_star", [](const std::string& tree, int trunc) {
    return perm_series_out(psi_star(parse_binary(tree), trunc));
  });

  // ---- matrix paths ----
  m.def("default_path", [] { return path_out(default_path()); });
  m.def("rb_integral", [](const PathData& f) { return path_out(rb_integral(path_in(f))); });
  m.def(
      "path_star",
      [](const PathData& f, const PathData& g, const Rational& theta) {
        return path_out(path_star(path_in(f), path_in(g), theta));
      },
      py::arg("f"), py::arg("g"), py::arg("theta") = Rational(0));
  m.def(
      "path_prec",
      [](const PathData& f, const PathData& g, const Rational& theta) {
        return path_out(path_prec(path_in(f), path_in(g), theta));
      },
      py::arg("f"), py::arg("g"), py::arg("theta") = Rational(0));
  m.def(
      "path_succ",
      [](const PathData& f, const PathData& g, const Rational& theta) {
        return path_out(path_succ(path_in(f), path_in(g), theta));
      },
      py::arg("f"), py::arg("g"), py::arg("theta") = Rational(0));
  m.def(
      "path_prelie",
      [](const PathData& f, const PathData& g, const Rational& theta) {
        return path_out(path_prelie(path_in(f), path_in(g), theta));
      },
      py::arg("f"), py::arg("g"), py::arg("theta") = Rational(0));
  m.def("eval_tree_path", [](const std::string& tree, const PathData& a) {
    return path_out(eval_tree_path(parse_rooted(tree), path_in(a)));
  });
  m.def("eval_perm_integral",
        [](const std::vector<int>& word, const PathData& a, const Rational& s) {
          return matrix_out(eval_perm_integral(Permutation(word), path_in(a), s));
        });
  m.def(
      "mps_omega",
      [](const PathData& a, int order, const Rational& s, int threads) {
        return matrix_out(mps_omega(path_in(a), order, s, threads));
      },
      py::arg("a"), py::arg("order"), py::arg("s"), py::arg("threads") = 1);
  m.def("closed_tree_omega", [](const PathData& a, int order, const Rational& s) {
    return matrix_out(closed_tree_omega(path_in(a), order, s));
  });
  m.def("prelie_omega_numeric", [](const PathData& a, int order, const Rational& s) {
    return matrix_out(prelie_omega_numeric(path_in(a), order, s));
  });
  m.def("chen_reference", [](const PathData& a, int levels, const Rational& s) {
    return matrix_out(chen_reference(path_in(a), levels, s));
  });
  m.def("dsw_check", [](const PathData& a, int degree, const Rational& s) {
    const auto [lhs, rhs] = dsw_check(path_in(a), degree, s);
    return py::make_tuple(matrix_out(lhs), matrix_out(rhs));
  });
  m.def("spitzer_check", [](const PathData& a, int order, const Rational& s) {
    return spitzer_check(path_in(a), order, s);
  });
  m.def("matrix_exp",
        [](const FloatMatrixData& rows) { return float_matrix_out(matrix_exp(float_matrix_in(rows))); });

  // ---- verification ----
  m.def(
      "run_verify",
      [](const std::string& suite, int degree, int threads) {
        const Report report = run_verify_suite(suite, degree, default_path(), threads);
        std::vector<py::tuple> checks;
        for (const CheckResult& c : report.checks)
          checks.push_back(py::make_tuple(c.name, c.pass, c.detail));
        return py::make_tuple(report.all_pass(), checks);
      },
      py::arg("suite"), py::arg("degree") = 4, py::arg("threads") = 1);

  py::list all_names;
  for (const auto& item : m.attr("__dict__").cast<py::dict>()) {
    const std::string name = py::str(item.first);
    if (!name.empty() && name[0] != '_') all_names.append(py::str(name));
  }
  m.attr("__all__") = all_names;
}

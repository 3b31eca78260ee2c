#include "magnusforest/serialization.hpp"

#include <fstream>
#include <stdexcept>

namespace magnusforest {

Json to_json(const RootedTree& tree) {
  Json j = Json::array();
  for (const RootedTree& child : tree.children()) j.push_back(to_json(child));
  return j;
}

Json to_json(const BinaryTree& tree) {
  if (tree.is_leaf()) return nullptr;
  return Json::array({to_json(tree.left()), to_json(tree.right())});
}

RootedTree rooted_tree_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("rooted tree JSON must be an array");
  std::vector<RootedTree> children;
  children.reserve(j.size());
  for (const Json& child : j) children.push_back(rooted_tree_from_json(child));
  return RootedTree(std::move(children));
}

BinaryTree binary_tree_from_json(const Json& j) {
  if (j.is_null()) return BinaryTree();
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("binary tree JSON must be null or a 2-array");
  return graft_vee(binary_tree_from_json(j[0]), binary_tree_from_json(j[1]));
}

Json to_json(const TreeSeries& series) {
  Json terms = Json::array();
  for (const auto& [tree, coeff] : series.terms()) {
    terms.push_back({{"tree", tree.repr()},
                     {"num", numerator(coeff).str()},
                     {"den", denominator(coeff).str()}});
  }
  return Json{{"trunc", series.trunc()}, {"terms", std::move(terms)}};
}

namespace {

Rational coeff_from_json(const Json& term) {
  const Integer num(term.at("num").get<std::string>());
  const Integer den(term.at("den").get<std::string>());
  if (den <= 0) throw std::invalid_argument("series coefficient denominator must be positive");
  return Rational(num, den);
}

}  // namespace

TreeSeries tree_series_from_json(const Json& j) {
  TreeSeries series(j.at("trunc").get<int>());
  for (const Json& term : j.at("terms"))
    series.add_term(parse_rooted(term.at("tree").get<std::string>()), coeff_from_json(term));
  return series;
}

Json to_json(const PermSeries& series) {
  Json terms = Json::array();
  if (series.constant_term() != 0) {
    terms.push_back({{"perm", Json::array()},
                     {"num", numerator(series.constant_term()).str()},
                     {"den", denominator(series.constant_term()).str()}});
  }
  for (const auto& [sigma, coeff] : series.terms()) {
    terms.push_back({{"perm", sigma.word()},
                     {"num", numerator(coeff).str()},
                     {"den", denominator(coeff).str()}});
  }
  return Json{{"trunc", series.trunc()}, {"terms", std::move(terms)}};
}

PermSeries perm_series_from_json(const Json& j) {
  PermSeries series(j.at("trunc").get<int>());
  for (const Json& term : j.at("terms")) {
    const auto word = term.at("perm").get<std::vector<int>>();
    if (word.empty())
      series.add_constant(coeff_from_json(term));
    else
      series.add_term(Permutation(word), coeff_from_json(term));
  }
  return series;
}

Json to_json(const MatPolyPath& path) {
  Json rows = Json::array();
  for (int i = 0; i < path.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < path.dim(); ++j) {
      Json coeffs = Json::array();
      const Poly& p = path.at(i, j);
      if (p.is_zero()) {
        coeffs.push_back("0");
      } else {
        for (const Rational& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
      }
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"dim", path.dim()}, {"entries", std::move(rows)}};
}

MatPolyPath mat_poly_path_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("path dimension must be >= 1");
  const Json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument("entries must be a dim x dim array");
  MatPolyPath path(dim);
  for (int r = 0; r < dim; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("entries must be a dim x dim array");
    for (int c = 0; c < dim; ++c) {
      std::vector<Rational> coeffs;
      for (const Json& coeff : row[c]) {
        if (coeff.is_string())
          coeffs.push_back(rational_from_string(coeff.get<std::string>()));
        else if (coeff.is_number_integer())
          coeffs.push_back(Rational(coeff.get<long long>()));
        else
          throw std::invalid_argument("polynomial coefficients must be rational strings");
      }
      path.at(r, c) = Poly(std::move(coeffs));
    }
  }
  return path;
}

Json to_json(const RatMatrix& matrix) {
  MatPolyPath path(matrix.dim());
  for (int i = 0; i < matrix.dim(); ++i)
    for (int j = 0; j < matrix.dim(); ++j) path.at(i, j) = Poly::constant(matrix.at(i, j));
  return to_json(path);
}

MatPolyPath load_path_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw std::invalid_argument("cannot open path file: " + filename);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed path JSON in " + filename + ": " + e.what());
  }
  return mat_poly_path_from_json(j);
}

}  // namespace magnusforest

#pragma once

#include <json.hpp>

#include "magnusforest/matrix_path.hpp"
#include "magnusforest/perm_series.hpp"
#include "magnusforest/tree_series.hpp"

namespace magnusforest {

using Json = nlohmann::json;

// Trees: nested arrays for rooted trees ([] is the single vertex); nested
// 2-arrays or null for binary trees (null is the leaf).
Json to_json(const RootedTree& tree);
Json to_json(const BinaryTree& tree);
RootedTree rooted_tree_from_json(const Json& j);
BinaryTree binary_tree_from_json(const Json& j);

// {"trunc": N, "terms": [{"tree": "<brackets>", "num": "...", "den": "..."}]}
// in canonical tree order.
Json to_json(const TreeSeries& series);
TreeSeries tree_series_from_json(const Json& j);

// Mirrors the tree schema with "perm" keys holding one-line words; the
// constant term uses the empty word.
Json to_json(const PermSeries& series);
PermSeries perm_series_from_json(const Json& j);

// {"dim": d, "entries": [[[c0, c1, ...], ...], ...]} row-major, rational
// coefficient strings "p/q"; exact matrices are degree-0 paths.
Json to_json(const MatPolyPath& path);
MatPolyPath mat_poly_path_from_json(const Json& j);
Json to_json(const RatMatrix& matrix);

MatPolyPath load_path_file(const std::string& filename);

}  // namespace magnusforest

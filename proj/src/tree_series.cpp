#include "magnusforest/tree_series.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace magnusforest {

TreeSeries::TreeSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation degree must be >= 0");
}

TreeSeries TreeSeries::unit(int trunc) {
  TreeSeries s(trunc);
  s.add_term(RootedTree(), 1);
  return s;
}

TreeSeries TreeSeries::basis(const RootedTree& tree, int trunc) {
  TreeSeries s(trunc);
  s.add_term(tree, 1);
  return s;
}

Rational TreeSeries::coefficient(const RootedTree& tree) const {
  auto it = terms_.find(tree);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TreeSeries::constant_term() const { return coefficient(RootedTree()); }

TreeSeries& TreeSeries::add_term(const RootedTree& tree, const Rational& coeff) {
  if (coeff == 0 || tree.degree() > trunc_) return *this;
  auto [it, inserted] = terms_.emplace(tree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

TreeSeries TreeSeries::degree_part(int degree) const {
  TreeSeries out(trunc_);
  for (const auto& [tree, coeff] : terms_)
    if (tree.degree() == degree) out.add_term(tree, coeff);
  return out;
}

TreeSeries TreeSeries::truncated(int new_trunc) const {
  TreeSeries out(new_trunc);
  for (const auto& [tree, coeff] : terms_) out.add_term(tree, coeff);
  return out;
}

TreeSeries& TreeSeries::operator+=(const TreeSeries& other) {
  if (other.trunc_ != trunc_) throw std::invalid_argument("mismatched truncation degrees");
  for (const auto& [tree, coeff] : other.terms_) add_term(tree, coeff);
  return *this;
}

TreeSeries& TreeSeries::operator-=(const TreeSeries& other) {
  if (other.trunc_ != trunc_) throw std::invalid_argument("mismatched truncation degrees");
  for (const auto& [tree, coeff] : other.terms_) add_term(tree, -coeff);
  return *this;
}

TreeSeries& TreeSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [tree, coeff] : terms_) coeff *= scalar;
  return *this;
}

namespace {

using TermCounts = std::vector<std::pair<RootedTree, long>>;

void bump(std::map<RootedTree, long>& acc, const RootedTree& t, long c) {
  auto [it, inserted] = acc.emplace(t, c);
  if (!inserted) it->second += c;
}

// Basis products are memoized: the same small tree pairs recur constantly
// in series products, oracles and fixpoints.
std::mutex star_mutex;

const TermCounts& basis_star(const RootedTree& s, const RootedTree& t) {
  static std::map<std::pair<RootedTree, RootedTree>, TermCounts> cache;
  {
    std::lock_guard<std::mutex> lock(star_mutex);
    auto it = cache.find({s, t});
    if (it != cache.end()) return it->second;
  }
  TermCounts result;
  if (s.is_single_vertex()) {
    result.emplace_back(t, 1);
  } else if (t.is_single_vertex()) {
    result.emplace_back(s, 1);
  } else {
    std::map<RootedTree, long> acc;
    const RootedTree& s1 = butcher_left(s);
    const RootedTree s2 = butcher_rest(s);
    const RootedTree& t1 = butcher_left(t);
    const RootedTree t2 = butcher_rest(t);
    for (const auto& [u, c] : basis_star(s2, t)) bump(acc, left_butcher(s1, u), c);
    for (const auto& [u, c] : basis_star(s, t1)) bump(acc, left_butcher(u, t2), c);
    result.assign(acc.begin(), acc.end());
  }
  std::lock_guard<std::mutex> lock(star_mutex);
  return cache.emplace(std::make_pair(s, t), std::move(result)).first->second;
}

// Half products on basis trees, both of positive degree.
TermCounts basis_half(const RootedTree& s, const RootedTree& t, bool left_side,
                      SplitConvention convention) {
  // Under FirstTermPrec, ≺ keeps the first term of the ⋆ recursion and ≻
  // the second; SecondTermPrec mirrors the assignment.
  const bool first_term = (convention == SplitConvention::FirstTermPrec) == left_side;
  TermCounts result;
  if (first_term) {
    const RootedTree& s1 = butcher_left(s);
    const RootedTree s2 = butcher_rest(s);
    for (const auto& [u, c] : basis_star(s2, t)) result.emplace_back(left_butcher(s1, u), c);
  } else {
    const RootedTree& t1 = butcher_left(t);
    const RootedTree t2 = butcher_rest(t);
    for (const auto& [u, c] : basis_star(s, t1)) result.emplace_back(left_butcher(u, t2), c);
  }
  return result;
}

void require_same_trunc(const TreeSeries& x, const TreeSeries& y) {
  if (x.trunc() != y.trunc()) throw std::invalid_argument("mismatched truncation degrees");
}

}  // namespace

TreeSeries star(const TreeSeries& x, const TreeSeries& y) {
  require_same_trunc(x, y);
  const int trunc = x.trunc();
  TreeSeries out(trunc);
  for (const auto& [s, cs] : x.terms()) {
    for (const auto& [t, ct] : y.terms()) {
      if (s.degree() + t.degree() > trunc) continue;
      const Rational c = cs * ct;
      for (const auto& [u, mult] : basis_star(s, t)) out.add_term(u, c * mult);
    }
  }
  return out;
}

namespace {

TreeSeries half_product(const TreeSeries& x, const TreeSeries& y, bool left_side,
                        SplitConvention convention) {
  require_same_trunc(x, y);
  const Rational x0 = x.constant_term();
  const Rational y0 = y.constant_term();
  if (x0 != 0 && y0 != 0)
    throw std::invalid_argument("unit half-products 1 ≺ 1 and 1 ≻ 1 are undefined");

  const int trunc = x.trunc();
  TreeSeries out(trunc);
  for (const auto& [s, cs] : x.terms()) {
    if (s.is_single_vertex()) continue;  // 1 ≺ y = 0, x-side unit drops on ≻ too
    for (const auto& [t, ct] : y.terms()) {
      if (s.degree() + t.degree() > trunc) continue;
      const Rational c = cs * ct;
      if (t.is_single_vertex()) {
        // x ≺ 1 = x, x ≻ 1 = 0
        if (left_side) out.add_term(s, c);
        continue;
      }
      for (const auto& [u, mult] : basis_half(s, t, left_side, convention))
        out.add_term(u, c * mult);
    }
  }
  if (!left_side && x0 != 0) {
    // 1 ≻ y = y on the non-constant part
    for (const auto& [t, ct] : y.terms())
      if (!t.is_single_vertex()) out.add_term(t, x0 * ct);
  }
  return out;
}

}  // namespace

TreeSeries prec(const TreeSeries& x, const TreeSeries& y, SplitConvention convention) {
  return half_product(x, y, true, convention);
}

TreeSeries succ(const TreeSeries& x, const TreeSeries& y, SplitConvention convention) {
  return half_product(x, y, false, convention);
}

TreeSeries prelie(const TreeSeries& x, const TreeSeries& y, SplitConvention convention) {
  if (!x.augmentation_ideal() || !y.augmentation_ideal())
    throw std::invalid_argument("pre-Lie product requires zero constant terms");
  return succ(x, y, convention) - prec(y, x, convention);
}

TreeSeries exp_star(const TreeSeries& x) {
  if (!x.augmentation_ideal())
    throw std::invalid_argument("exp_star requires a zero constant term");
  const int trunc = x.trunc();
  TreeSeries acc = TreeSeries::unit(trunc);
  TreeSeries power = TreeSeries::unit(trunc);
  Rational inv_factorial = 1;
  for (int n = 1; n <= trunc; ++n) {
    power = star(power, x);
    if (power.is_zero()) break;
    inv_factorial /= n;
    acc += inv_factorial * power;
  }
  return acc;
}

TreeSeries log_star(const TreeSeries& u) {
  if (u.constant_term() != 1)
    throw std::invalid_argument("log_star requires a constant term equal to 1");
  const int trunc = u.trunc();
  TreeSeries y = u - TreeSeries::unit(trunc);
  TreeSeries acc(trunc);
  TreeSeries power = TreeSeries::unit(trunc);
  for (int n = 1; n <= trunc; ++n) {
    power = star(power, y);
    if (power.is_zero()) break;
    const Rational c = (n % 2 == 0) ? Rational(-1, n) : Rational(1, n);
    acc += c * power;
  }
  return acc;
}

TreeSeries solve_left_fixpoint(const TreeSeries& a, int trunc, SplitConvention convention) {
  if (!a.augmentation_ideal())
    throw std::invalid_argument("fixpoint source must have a zero constant term");
  const TreeSeries source = a.truncated(trunc);
  const TreeSeries one = TreeSeries::unit(trunc);
  TreeSeries x = one;
  for (int n = 0; n < trunc; ++n) x = one + prec(source, x, convention);
  return x;
}

TreeSeries ladder_star(int n, int m, int trunc) {
  if (n < 1 || m < 1) throw std::invalid_argument("ladder_star requires n, m >= 1");
  TreeSeries out(trunc);
  const RootedTree vertex;
  for (int r = 0; r <= m; ++r) {
    RootedTree t = left_butcher(ladder(n - 1), ladder(m - r));
    for (int i = 0; i < r; ++i) t = left_butcher(t, vertex);
    out.add_term(t, 1);
  }
  return out;
}

Rational magnus_coefficient(const RootedTree& tree) {
  const int n = tree.degree();
  if (n < 1) throw std::invalid_argument("magnus_coefficient requires degree >= 1");
  const int leaves = leaf_count(tree);
  const Rational value(1, Integer(n) * binomial(n - 1, leaves - 1));
  return (leaves - 1) % 2 == 0 ? value : -value;
}

Rational fixpoint_log_coefficient(const RootedTree& tree) {
  const int n = tree.degree();
  const Rational base = magnus_coefficient(tree);
  return (n - 1) % 2 == 0 ? base : -base;
}

Rational descent_magnus_coefficient(const BinaryTree& tree) {
  const int n = tree.degree();
  if (n < 1) throw std::invalid_argument("descent_magnus_coefficient requires degree >= 1");
  const int d = descent_count(tree);
  const Rational value(1, Integer(n) * binomial(n - 1, d));
  return d % 2 == 0 ? value : -value;
}

TreeSeries closed_magnus_series(int trunc) {
  if (trunc < 1) throw std::invalid_argument("closed_magnus_series requires trunc >= 1");
  TreeSeries out(trunc);
  for (int n = 1; n <= trunc; ++n)
    for (const RootedTree& tree : enumerate_rooted(n)) out.add_term(tree, magnus_coefficient(tree));
  return out;
}

TreeSeries ladder_log_oracle(int trunc) {
  if (trunc < 1) throw std::invalid_argument("ladder_log_oracle requires trunc >= 1");
  TreeSeries u = TreeSeries::unit(trunc);
  for (int n = 1; n <= trunc; ++n) u.add_term(ladder(n), 1);
  return log_star(u);
}

Rational bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  for (int k = static_cast<int>(cache.size()); k <= m; ++k) {
    Rational sum = 0;
    for (int j = 0; j < k; ++j) sum += Rational(binomial(k + 1, j)) * cache[j];
    cache.push_back(-sum / Rational(k + 1));
  }
  return cache[m];
}

TreeSeries prelie_magnus_series(const TreeSeries& a, int trunc, SplitConvention convention) {
  if (!a.augmentation_ideal())
    throw std::invalid_argument("pre-Lie Magnus source must have a zero constant term");
  const TreeSeries source = a.truncated(trunc);
  TreeSeries omega = source;
  // Each pass fixes one more degree: the degree-n part of the right hand
  // side only involves lower-degree parts of omega.
  for (int pass = 0; pass < trunc; ++pass) {
    TreeSeries next = source;
    TreeSeries iterated = source;  // L_{omega ▷}^m(a) for the current m
    for (int m = 1; m <= trunc; ++m) {
      iterated = prelie(omega, iterated, convention);
      if (iterated.is_zero()) break;
      const Rational bm = bernoulli(m);
      if (bm == 0) continue;
      next += (bm / Rational(factorial(m))) * iterated;
    }
    if (next == omega) break;
    omega = next;
  }
  return omega;
}

}  // namespace magnusforest

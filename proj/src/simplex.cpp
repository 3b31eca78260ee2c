#include "magnusforest/simplex.hpp"

#include <stdexcept>

namespace magnusforest {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("MultiPoly needs at least one variable");
}

MultiPoly MultiPoly::from_univariate(const Poly& p, int var, int nvars) {
  MultiPoly out(nvars);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coefficient(k) == 0) continue;
    std::vector<int> exps(nvars, 0);
    exps[var] = k;
    out.add_term(std::move(exps), p.coefficient(k));
  }
  return out;
}

MultiPoly& MultiPoly::add_term(std::vector<int> exponents, const Rational& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(std::move(exponents), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

MultiPoly MultiPoly::antiderivative(int var) const {
  MultiPoly out(nvars_);
  for (const auto& [exps, coeff] : terms_) {
    std::vector<int> e = exps;
    e[var] += 1;
    out.add_term(std::move(e), coeff / Rational(exps[var] + 1));
  }
  return out;
}

MultiPoly MultiPoly::substitute_var(int var, int replacement) const {
  MultiPoly out(nvars_);
  for (const auto& [exps, coeff] : terms_) {
    std::vector<int> e = exps;
    e[replacement] += e[var];
    e[var] = 0;
    out.add_term(std::move(e), coeff);
  }
  return out;
}

MultiPoly MultiPoly::substitute_value(int var, const Rational& value) const {
  MultiPoly out(nvars_);
  for (const auto& [exps, coeff] : terms_) {
    Rational scaled = coeff;
    for (int k = 0; k < exps[var]; ++k) scaled *= value;
    std::vector<int> e = exps;
    e[var] = 0;
    out.add_term(std::move(e), scaled);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e = ea;
      for (int k = 0; k < out.nvars_; ++k) e[k] += eb[k];
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

MultiPoly operator*(const Rational& c, MultiPoly p) {
  if (c == 0) return MultiPoly(p.nvars_);
  for (auto& [exps, coeff] : p.terms_) coeff *= c;
  return p;
}

SimplexPoly::SimplexPoly(int dim, int nvars)
    : dim_(dim), nvars_(nvars), entries_(static_cast<std::size_t>(dim) * dim, MultiPoly(nvars)) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

SimplexPoly SimplexPoly::identity(int dim, int nvars) {
  SimplexPoly m(dim, nvars);
  for (int i = 0; i < dim; ++i) m.at(i, i).add_term(std::vector<int>(nvars, 0), 1);
  return m;
}

SimplexPoly SimplexPoly::path_factor(const MatPolyPath& a, int var, int nvars) {
  SimplexPoly m(a.dim(), nvars);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      m.at(i, j) = MultiPoly::from_univariate(a.at(i, j), var, nvars);
  return m;
}

SimplexPoly SimplexPoly::antiderivative(int var) const {
  SimplexPoly out(dim_, nvars_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].antiderivative(var);
  return out;
}

SimplexPoly SimplexPoly::substitute_var(int var, int replacement) const {
  SimplexPoly out(dim_, nvars_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i].substitute_var(var, replacement);
  return out;
}

RatMatrix SimplexPoly::substitute_value_full(int var, const Rational& value) const {
  RatMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const MultiPoly reduced = at(i, j).substitute_value(var, value);
      Rational total = 0;
      for (const auto& [exps, coeff] : reduced.terms()) {
        for (int e : exps)
          if (e != 0)
            throw std::logic_error("simplex integration left an unbound variable");
        total += coeff;
      }
      out.at(i, j) = total;
    }
  return out;
}

SimplexPoly operator*(const SimplexPoly& a, const SimplexPoly& b) {
  if (a.dim_ != b.dim_ || a.nvars_ != b.nvars_)
    throw std::invalid_argument("simplex matrix mismatch");
  SimplexPoly out(a.dim_, a.nvars_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const MultiPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

SimplexPoly operator-(const SimplexPoly& a, const SimplexPoly& b) {
  if (a.dim_ != b.dim_ || a.nvars_ != b.nvars_)
    throw std::invalid_argument("simplex matrix mismatch");
  SimplexPoly out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] += Rational(-1) * b.entries_[i];
  return out;
}

namespace {

// Integrate u_n, then u_{n-1}, ..., substituting the upper bound u_{j-1}
// after each antiderivative; the lower bound 0 contributes nothing because
// every antiderivative term carries a positive power of the variable.
RatMatrix integrate_over_simplex(SimplexPoly integrand, int n, const Rational& s) {
  for (int j = n - 1; j >= 1; --j)
    integrand = integrand.antiderivative(j).substitute_var(j, j - 1);
  return integrand.antiderivative(0).substitute_value_full(0, s);
}

}  // namespace

RatMatrix eval_perm_integral(const Permutation& sigma, const MatPolyPath& a, const Rational& s) {
  const int n = sigma.size();
  SimplexPoly integrand = SimplexPoly::path_factor(a, sigma(1) - 1, n);
  for (int k = 2; k <= n; ++k)
    integrand = integrand * SimplexPoly::path_factor(a, sigma(k) - 1, n);
  return integrate_over_simplex(std::move(integrand), n, s);
}

RatMatrix eval_perm_bracket_integral(const Permutation& sigma, const MatPolyPath& a,
                                     const Rational& s) {
  const int n = sigma.size();
  if (n < 2) throw std::invalid_argument("bracket integrand needs n >= 2");
  SimplexPoly bracket = SimplexPoly::path_factor(a, sigma(n) - 1, n);
  for (int k = n - 1; k >= 1; --k) {
    const SimplexPoly factor = SimplexPoly::path_factor(a, sigma(k) - 1, n);
    bracket = factor * bracket - bracket * factor;
  }
  return integrate_over_simplex(std::move(bracket), n, s);
}

}  // namespace magnusforest

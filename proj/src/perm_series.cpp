#include "magnusforest/perm_series.hpp"

#include <stdexcept>

namespace magnusforest {

PermSeries::PermSeries(int trunc) : trunc_(trunc), constant_(0) {
  if (trunc < 0) throw std::invalid_argument("truncation degree must be >= 0");
}

PermSeries PermSeries::unit(int trunc) {
  PermSeries s(trunc);
  s.constant_ = 1;
  return s;
}

PermSeries PermSeries::basis(const Permutation& sigma, int trunc) {
  PermSeries s(trunc);
  s.add_term(sigma, 1);
  return s;
}

Rational PermSeries::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Rational(0) : it->second;
}

PermSeries& PermSeries::add_constant(const Rational& coeff) {
  constant_ += coeff;
  return *this;
}

PermSeries& PermSeries::add_term(const Permutation& sigma, const Rational& coeff) {
  if (coeff == 0 || sigma.size() > trunc_) return *this;
  auto [it, inserted] = terms_.emplace(sigma, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

PermSeries& PermSeries::operator+=(const PermSeries& other) {
  if (other.trunc_ != trunc_) throw std::invalid_argument("mismatched truncation degrees");
  constant_ += other.constant_;
  for (const auto& [sigma, coeff] : other.terms_) add_term(sigma, coeff);
  return *this;
}

PermSeries& PermSeries::operator-=(const PermSeries& other) {
  if (other.trunc_ != trunc_) throw std::invalid_argument("mismatched truncation degrees");
  constant_ -= other.constant_;
  for (const auto& [sigma, coeff] : other.terms_) add_term(sigma, -coeff);
  return *this;
}

PermSeries& PermSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= scalar;
  for (auto& [sigma, coeff] : terms_) coeff *= scalar;
  return *this;
}

namespace {

void require_same_trunc(const PermSeries& x, const PermSeries& y) {
  if (x.trunc() != y.trunc()) throw std::invalid_argument("mismatched truncation degrees");
}

void accumulate_shuffles(PermSeries& out, const Permutation& sigma, const Permutation& tau,
                         const Rational& coeff, ShuffleKind kind) {
  const Permutation stacked = concat_shift(sigma, tau);
  for (const Permutation& omega : shuffle_set(sigma.size(), tau.size(), kind))
    out.add_term(compose(omega, stacked), coeff);
}

}  // namespace

PermSeries perm_star(const PermSeries& x, const PermSeries& y) {
  require_same_trunc(x, y);
  const int trunc = x.trunc();
  PermSeries out(trunc);
  out.add_constant(x.constant_term() * y.constant_term());
  for (const auto& [tau, c] : y.terms()) out.add_term(tau, x.constant_term() * c);
  for (const auto& [sigma, c] : x.terms()) out.add_term(sigma, c * y.constant_term());
  for (const auto& [sigma, cs] : x.terms())
    for (const auto& [tau, ct] : y.terms()) {
      if (sigma.size() + tau.size() > trunc) continue;
      accumulate_shuffles(out, sigma, tau, cs * ct, ShuffleKind::All);
    }
  return out;
}

namespace {

PermSeries perm_half(const PermSeries& x, const PermSeries& y, ShuffleKind kind) {
  require_same_trunc(x, y);
  if (!x.augmentation_ideal() || !y.augmentation_ideal())
    throw std::invalid_argument("permutation half-products require augmentation-ideal arguments");
  PermSeries out(x.trunc());
  for (const auto& [sigma, cs] : x.terms())
    for (const auto& [tau, ct] : y.terms()) {
      if (sigma.size() + tau.size() > x.trunc()) continue;
      accumulate_shuffles(out, sigma, tau, cs * ct, kind);
    }
  return out;
}

}  // namespace

PermSeries perm_prec(const PermSeries& x, const PermSeries& y) {
  return perm_half(x, y, ShuffleKind::Sh2);
}

PermSeries perm_succ(const PermSeries& x, const PermSeries& y) {
  return perm_half(x, y, ShuffleKind::Sh1);
}

PermSeries psi_star(const BinaryTree& tree, int trunc) {
  PermSeries out(trunc);
  if (tree.degree() == 0) return PermSeries::unit(trunc);
  for (const Permutation& sigma : psi_fiber(tree)) out.add_term(sigma, 1);
  return out;
}

}  // namespace magnusforest

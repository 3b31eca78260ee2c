#pragma once

#include <stdexcept>

#include "magnusforest/rational.hpp"

namespace magnusforest {

// Group of formal flows on a complete filtered left pre-Lie algebra. The
// algebra type S must provide trunc(), augmentation_ideal(), is_zero(),
// +, -, Rational * S, and an ADL-visible prelie(S, S). Instantiated with
// TreeSeries in production and with a tiny associative stand-in in tests.

namespace flows_detail {

template <class S>
void require_flow_arg(const S& a) {
  if (!a.augmentation_ideal())
    throw std::invalid_argument("flow arguments must have a zero constant term");
}

// e^{L_{x ▷}}(y) = Σ_{m>=0} L_{x ▷}^m(y) / m!
template <class S>
S exp_left_prelie(const S& x, const S& y) {
  S acc = y;
  S iterated = y;
  Rational inv_factorial = 1;
  for (int m = 1; m <= x.trunc(); ++m) {
    iterated = prelie(x, iterated);
    if (iterated.is_zero()) break;
    inv_factorial /= m;
    acc += inv_factorial * iterated;
  }
  return acc;
}

}  // namespace flows_detail

/// W(a) = e^{L_{a▷}} 1 − 1 = a + ½ a▷a + ⅙ a▷(a▷a) + ...
template <class S>
S flow_w(const S& a) {
  flows_detail::require_flow_arg(a);
  S acc = a;
  S iterated = a;  // L_{a▷}^{m-1}(a)
  Rational inv_factorial = 1;
  for (int m = 2; m <= a.trunc(); ++m) {
    iterated = prelie(a, iterated);
    if (iterated.is_zero()) break;
    inv_factorial /= m;
    acc += inv_factorial * iterated;
  }
  return acc;
}

/// Functional inverse of W, solved degree by degree; coincides with the
/// pre-Lie Magnus expansion.
template <class S>
S flow_omega(const S& b) {
  flows_detail::require_flow_arg(b);
  S a = b;
  for (int pass = 1; pass <= b.trunc(); ++pass) {
    S correction = flow_w(a) - a;  // the degree->n part only uses lower degrees of a
    S next = b - correction;
    if (next == a) break;
    a = next;
  }
  return a;
}

/// Transported Baker–Campbell–Hausdorff product: a # b = a + e^{L_{Ω(a)▷}} b,
/// associative with unit 0.
template <class S>
S sharp(const S& a, const S& b) {
  flows_detail::require_flow_arg(a);
  flows_detail::require_flow_arg(b);
  if (b.is_zero()) return a;
  const S omega = flow_omega(a);
  return a + flows_detail::exp_left_prelie(omega, b);
}

/// a^{#-1} = e^{-L_{Ω(a)▷}} 1 − 1 = Σ_{m>=1} (-1)^m L_{Ω(a)▷}^{m-1}(Ω(a)) / m!
template <class S>
S sharp_inverse(const S& a) {
  flows_detail::require_flow_arg(a);
  const S omega = flow_omega(a);
  S acc = Rational(-1) * omega;
  S iterated = omega;
  Rational coeff = -1;
  for (int m = 2; m <= a.trunc(); ++m) {
    iterated = prelie(omega, iterated);
    if (iterated.is_zero()) break;
    coeff /= -m;  // (-1)^m / m!
    acc += coeff * iterated;
  }
  return acc;
}

}  // namespace magnusforest

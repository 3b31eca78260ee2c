#pragma once

#include <utility>

#include "magnusforest/matrix_path.hpp"
#include "magnusforest/simplex.hpp"

namespace magnusforest {

/// Permutation-route Magnus truncation (the Mielnik-Plebanski-Strichartz
/// sum): Σ_{n<=N} Σ_{σ in S_n} mps_coefficient(σ) · simplex integral of σ.
/// The gold standard the other routes are checked against. The per-σ
/// integrals may be computed on several threads; the reduction order is
/// fixed, so the result is bit-identical for every thread count.
RatMatrix mps_omega(const MatPolyPath& a, int order, const Rational& s, int threads = 1);

/// Degree-n part alone.
RatMatrix mps_omega_degree(const MatPolyPath& a, int degree, const Rational& s, int threads = 1);

/// Tree-route truncation: Σ fixpoint_log_coefficient(τ) · R(E(τ, a))(s)
/// over all rooted trees of degree 1..N.
RatMatrix closed_tree_omega(const MatPolyPath& a, int order, const Rational& s);
RatMatrix closed_tree_omega_degree(const MatPolyPath& a, int degree, const Rational& s);

/// Mirrored-convention variant of the tree route, kept so the verify suite
/// can show the normative evaluation convention is the one that matches the
/// permutation route.
RatMatrix closed_tree_omega_mirrored(const MatPolyPath& a, int order, const Rational& s);

/// Pre-Lie route: solve Ω' = Σ_m (B_m/m!) L_{Ω'▷}^(m)(a) degree by degree
/// in the path algebra (θ = 0), then return R(Ω')(s).
RatMatrix prelie_omega_numeric(const MatPolyPath& a, int order, const Rational& s);
RatMatrix prelie_omega_numeric_degree(const MatPolyPath& a, int degree, const Rational& s);

/// Dynkin-Specht-Wever cross-check: degree-n part of mps_omega against the
/// right-nested bracket sum with weights (-1)^{d(σ)} / (n² binom(n-1,d)).
/// The two must be equal for 2 <= n <= 5.
std::pair<RatMatrix, RatMatrix> dsw_check(const MatPolyPath& a, int degree, const Rational& s,
                                          int threads = 1);

/// ‖chen_reference(a, N, s) − exp(mps_omega(a, N, s))‖ in floating point;
/// behaves as O(s^{N+1}).
double spitzer_check(const MatPolyPath& a, int order, const Rational& s, int threads = 1);

/// The default non-commuting test path [[0, 1], [-1 - t, 0]].
MatPolyPath default_path();

}  // namespace magnusforest

#pragma once

#include <vector>

#include "zmw/parameters.hpp"

namespace zmw {

/// Σ_{λ ⊢ Σ(l_i+1)} χ^λ_{(l_1+1, ..., l_n+1)} φ(λ) = E[p̃_{(l_1+1, ...)}].
/// Guard: Σ(l_i + 1) ≤ 20.
double sigma_moment(const std::vector<int>& ls, const Parameters& params);

/// (t)_{Σl_i} · sigma_moment((l_1 - 1, ..., l_n - 1)), l_i ≥ 1: the predicted
/// value of the signed lifted moment E Σ sgn(u) u^l over lifted points.
double lifted_moment_combinatorial(const std::vector<int>& ls, const Parameters& params);

/// E|α| in closed form; the μ = 0 case by Richardson extrapolation in μ.
double expected_alpha_mass(const Parameters& params);
/// E|β| = E|α| at (-z, -z').
double expected_beta_mass(const Parameters& params);

/// exp(-π sin(2πμ) / (2μσ²)), the geometric decay rate of α_k and β_k.
double decay_constant(const Parameters& params);

// Quadrature sizes for ρ_1: Gauss–Legendre panels in log u, log θ and
// log x (width capped further by 6/(1+2|Im z|)), Gauss–Jacobi on the upper
// halves where the algebraic endpoint factors live.
struct Rho1Options {
  int panel_nodes = 12;
  double panel_width = 2.0;
  int jacobi_nodes = 24;
};

/// First correlation density of the α-points at x ∈ (0, 1), from the
/// two-dimensional integral representation.  Requires t > 1 and
/// -1 < Re z, Re z' < 1.
double rho1_positive(double x, const Parameters& params, const Rho1Options& opts = {});

/// ∫_0^1 x ρ_1(x) dx, which equals E|α|.
double rho1_first_moment(const Parameters& params, const Rho1Options& opts = {});

}  // namespace zmw

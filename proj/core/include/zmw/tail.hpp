#pragma once

#include <array>

#include "zmw/parameters.hpp"

namespace zmw {

/// 2×2 block value [[++, +-], [-+, --]].
using Block2 = std::array<std::array<double, 2>, 2>;

/**
 * Constants of the tail process:
 *   c = 2μσ² / (π sin 2πμ),  B = π sin 2πμ / (4μσ²),  A = 2μB,  cB = 1/2.
 * A is real in the complementary series and pure imaginary in the principal
 * series; only A² enters the kernels.
 */
struct TailConstants {
  double c = 0.0;
  double B = 0.0;
  MuKind a_kind = MuKind::real;
  double a_value = 0.0;  // A = a_value or A = i·a_value

  static TailConstants from(const Parameters& params);

  cplx A() const;
  double A_squared() const;
};

/// F(ζ) = (B/A) sinh(Aζ)/sinh(Bζ), F(0) = 1.
double tail_f(double zeta, const Parameters& params);
/// G(ζ) = [ (sin πμ/μ) cos πa cosh Aζ + sin πa cos πμ · 2B sinh(Aζ)/A ] / (2σ cosh Bζ).
double tail_g(double zeta, const Parameters& params);

/// Limit kernel [[F(ξ-η), G(η-ξ)], [-G(ξ-η), F(ξ-η)]] in the variable ξ = -c ln x.
Block2 tail_kernel(double xi, double eta, const Parameters& params);

/// Zero diagonal blocks; 𝓛_{+-}(ξ,η) = (σB/π) e^{-2aB(ξ-η)} / cosh B(ξ-η),
/// 𝓛_{-+}(ξ,η) = -𝓛_{+-}(η,ξ).  Requires |a| < 1/2.
Block2 tail_l_kernel(double xi, double eta, const Parameters& params);

}  // namespace zmw

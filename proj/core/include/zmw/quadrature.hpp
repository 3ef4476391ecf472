#pragma once

#include <functional>
#include <vector>

namespace zmw {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss–Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// n-point Gauss–Legendre rule mapped to [lo, hi].
QuadratureRule gauss_legendre(int n, double lo, double hi);

/// n-point Gauss–Jacobi rule on [-1, 1] for the weight (1-x)^alpha (1+x)^beta,
/// alpha, beta > -1, by the Golub–Welsch eigenvalue method.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

/**
 * Tanh-sinh rule on (0, 1) with step h on t ∈ [-T, T].
 *
 * Nodes are stored together with their complements 1 - x, computed without
 * cancellation, so integrands singular at either end can be evaluated as
 * f(x, 1 - x).
 */
struct TanhSinhRule {
  std::vector<double> nodes;
  std::vector<double> complements;
  std::vector<double> weights;

  TanhSinhRule(double h, double t_max);

  std::size_t size() const { return nodes.size(); }

  template <typename T, typename F>
  T integrate(F&& f) const {
    T acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      acc += weights[i] * f(nodes[i], complements[i]);
    }
    return acc;
  }
};

/**
 * Uniform trapezoid in s with x = log(1 + e^s) over s ∈ [s_min, s_max].
 *
 * Near 0 the nodes are geometric (x ≈ e^s); for large s they become
 * uniform (x ≈ s).  dx/ds = 1/(1 + e^{-s}).
 */
QuadratureRule softplus_trapezoid(double h, double s_min, double s_max);

/// x = log(1 + e^s) computed without overflow.
double softplus(double s);

}  // namespace zmw

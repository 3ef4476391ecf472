#include "zmw/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "zmw/error.hpp"
#include "zmw/specfun.hpp"

namespace zmw {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  QuadratureRule rule = gauss_legendre(n);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("gauss_jacobi: n must be positive");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("gauss_jacobi: exponents must exceed -1");
  }
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    double b2;
    if (k == 1) {
      // Cancelled form; the generic one is 0/0 when alpha + beta = -1.
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off(k - 1) = std::sqrt(b2);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("gauss_jacobi: tridiagonal eigensolver failed");
  }
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) +
                         log_gamma(beta + 1.0) - log_gamma(ab + 2.0);
  const double mu0 = std::exp(log_mu0);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

TanhSinhRule::TanhSinhRule(double h, double t_max) {
  const double half_pi = 0.5 * std::numbers::pi;
  const int m = static_cast<int>(std::ceil(t_max / h));
  for (int k = -m; k <= m; ++k) {
    const double t = k * h;
    const double u = half_pi * std::sinh(t);
    // x = 1/(1+e^{-2u}), 1-x = 1/(1+e^{2u}).
    const double e = std::exp(-2.0 * std::fabs(u));
    const double small = e / (1.0 + e);
    const double large = 1.0 / (1.0 + e);
    const double x = u >= 0.0 ? large : small;
    const double xc = u >= 0.0 ? small : large;
    const double w = h * half_pi * std::cosh(t) * 2.0 * small * large;
    if (x <= 0.0 || xc <= 0.0 || w == 0.0) continue;
    nodes.push_back(x);
    complements.push_back(xc);
    weights.push_back(w);
  }
}

double softplus(double s) {
  return s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s));
}

QuadratureRule softplus_trapezoid(double h, double s_min, double s_max) {
  if (!(h > 0.0) || !(s_max > s_min)) {
    throw DomainError("softplus_trapezoid: need h > 0 and s_max > s_min");
  }
  QuadratureRule rule;
  const int n = static_cast<int>(std::floor((s_max - s_min) / h + 1e-9)) + 1;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double s = s_min + k * h;
    rule.nodes.push_back(softplus(s));
    rule.weights.push_back(h / (1.0 + std::exp(-s)));
  }
  return rule;
}

}  // namespace zmw

#pragma once

#include <array>
#include <span>
#include <vector>

#include "zmw/parameters.hpp"
#include "zmw/specfun.hpp"
#include "zmw/tail.hpp"

namespace zmw {

enum class Side { plus, minus };

/// A point of ℝ* = ℝ₊ ⊔ ℝ₊: u = x on the + copy, u = -x on the - copy.
struct KernelPoint {
  Side side = Side::plus;
  double x = 1.0;

  static KernelPoint from_signed(double u);
  double signed_value() const { return side == Side::plus ? x : -x; }
};

/// W and dW/dx at one x for κ = a+½, a-½, -a+½, -a-½ (in that order).
struct WhittakerJet {
  double x = 0.0;
  std::array<double, 4> w{};
  std::array<double, 4> dw{};
};

/**
 * Matrix Whittaker kernel with blocks
 *   K++(x,y) = [A₊(x)B₊(y) - B₊(x)A₊(y)] / [(x-y) Γ(z)Γ(z')]
 *   K+-(x,y) = (σ/π) [A₊(x)A₋(y) + t B₊(x)B₋(y)] / (x+y)
 *   K-+(x,y) = -(σ/π) [A₊(y)A₋(x) + t B₊(y)B₋(x)] / (x+y)
 *   K--(x,y) = [A₋(x)B₋(y) - B₋(x)A₋(y)] / [(x-y) Γ(-z)Γ(-z')]
 * with A± = W_{±a+½,μ}(x)/√x and B± = W_{±a-½,μ}(x)/√x.
 *
 * The diagonal of K++ and K-- is the confluent limit (a Wronskian of the two
 * W's over x); for |x-y| < 1e-4 (x+y) a midpoint expansion replaces the
 * cancelling difference quotient.
 */
class MatrixWhittakerKernel {
 public:
  explicit MatrixWhittakerKernel(const Parameters& params);

  WhittakerJet jet(double x) const;
  /// Jets at many points in one continuation sweep per W.
  std::vector<WhittakerJet> jets(std::span<const double> xs) const;

  double operator()(const KernelPoint& u, const KernelPoint& v) const;
  double value(Side su, const WhittakerJet& jx, Side sv, const WhittakerJet& jy) const;
  Block2 evaluate(double x, double y) const;

  const Parameters& params() const { return params_; }

 private:
  double difference_block(int f, int g, double pre, const WhittakerJet& jx,
                          const WhittakerJet& jy) const;
  double q(int idx, double x) const;
  double dq(int idx, double x) const;

  Parameters params_;
  std::array<double, 4> kappa_;
  std::vector<WhittakerSolver> solvers_;
  double pre_pp_;
  double pre_mm_;
  double sigma_over_pi_;
};

double whittaker_kernel(const KernelPoint& u, const KernelPoint& v, const Parameters& params);

/// Zero diagonal blocks; L+-(x,y) = A(x,y), L-+(x,y) = -A(y,x).  |a| < ½.
double l_kernel(const KernelPoint& u, const KernelPoint& v, const Parameters& params);
Block2 l_kernel_blocks(double x, double y, const Parameters& params);

/// A(x,y) = (σ/π) (x/y)^a e^{-(x+y)/2} / (x+y).  |a| < ½.
double a_kernel(double x, double y, const Parameters& params);

/// f_{a,m}(x) = W_{a,im}(x) / x.
double spectral_eigenfunction(double m, double a, double x);
/// (σ/π) |Γ(½ - a + im)|²: A f_{-a,m} = a_eigenvalue · f_{a,m}.
double a_eigenvalue(double m, const Parameters& params);
/// (cos 2πμ - cos 2πa) / (cos 2πμ + cosh 2πm), the eigenvalue of K++ on f_{a,m}.
double kpp_eigenvalue(double m, const Parameters& params);

/// Order-N Laguerre kernel Σ_{k<N} ψ_k(x)ψ_k(y),
/// ψ_k(x) = sqrt(k!/Γ(k+α+1)) x^{α/2} e^{-x/2} L_k^α(x), by Christoffel–Darboux.
double laguerre_kernel(int n, double alpha, double x, double y);

}  // namespace zmw

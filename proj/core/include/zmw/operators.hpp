#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zmw/kernels.hpp"
#include "zmw/quadrature.hpp"

namespace zmw {

/// Nodes and weights on the two half-lines of ℝ* (either side may be empty).
struct QuadratureGrid {
  std::vector<double> plus_nodes;
  std::vector<double> plus_weights;
  std::vector<double> minus_nodes;
  std::vector<double> minus_weights;
  std::string scheme;

  static QuadratureGrid both_sides(const QuadratureRule& rule, std::string scheme);
  static QuadratureGrid plus_only(const QuadratureRule& rule, std::string scheme);

  std::size_t plus_size() const { return plus_nodes.size(); }
  std::size_t minus_size() const { return minus_nodes.size(); }
  std::size_t size() const { return plus_size() + minus_size(); }
  KernelPoint point(std::size_t index) const;
  double weight(std::size_t index) const;
  void validate() const;
};

/// Softplus-trapezoid grid on both sides, see softplus_trapezoid.
QuadratureGrid softplus_grid(double h, double s_min, double s_max);

/**
 * Symmetrized Nyström matrix M_ij = sqrt(w_i) k(u_i, u_j) sqrt(w_j), with the
 * + nodes first.  det(1 - M) and the spectrum of M approximate those of the
 * integral operator.
 */
class BlockKernelMatrix {
 public:
  BlockKernelMatrix(QuadratureGrid grid, Eigen::MatrixXd weighted);

  const QuadratureGrid& grid() const { return grid_; }
  const Eigen::MatrixXd& weighted() const { return m_; }
  Eigen::MatrixXd block(Side row, Side col) const;
  /// Unweighted kernel value at node pair (i, j) in global indexing.
  double kernel_value(std::size_t i, std::size_t j) const;

 private:
  QuadratureGrid grid_;
  Eigen::MatrixXd m_;
  Eigen::VectorXd sqrt_w_;
};

using KernelFunction = std::function<double(const KernelPoint&, const KernelPoint&)>;

BlockKernelMatrix discretize(const KernelFunction& kernel, const QuadratureGrid& grid);
/// Matrix Whittaker kernel on a grid, sharing one W sweep over all nodes.
BlockKernelMatrix discretize_whittaker(const Parameters& params, const QuadratureGrid& grid);
/// L-kernel on a grid; diagonal blocks exactly zero.
BlockKernelMatrix discretize_l(const Parameters& params, const QuadratureGrid& grid);

/// Solves (1 + L) K = L.
BlockKernelMatrix k_from_l(const BlockKernelMatrix& l);

/// AA'(1 + AA')^{-1} on the + side of the grid (symmetrized weighting).
Eigen::MatrixXd kpp_from_a(const Parameters& params, const QuadratureGrid& grid);

/// ρ̃_n(u_1..u_n) = det[K(u_i, u_j)].
double correlation(std::span<const KernelPoint> points, const Parameters& params);

struct FredholmOptions {
  int panels = 12;          // Gauss–Legendre panels in s, x = τ e^s
  int order = 16;           // nodes per panel
  double span = 60.0;       // integrate over [τ, τ + span]
  double tolerance = 1e-5;  // allowed relative shift under panel doubling
};

struct FredholmResult {
  double value = 0.0;
  double refined = 0.0;
  double shift = 0.0;
  int nodes = 0;
};

/// det(1 - K) on [τ, ∞) for a scalar kernel, with one refinement check.
FredholmResult fredholm_det(const std::function<double(double, double)>& kernel, double tau,
                            const FredholmOptions& opts = {});
/// P(largest lifted point < τ) = det(1 - K++ on [τ, ∞)).
FredholmResult gap_probability(const Parameters& params, double tau,
                               const FredholmOptions& opts = {});

struct DiagMomentOptions {
  double h = 0.2;
  double s_min = -40.0;
  double s_max = 90.0;
  double tolerance = 1e-8;  // relative agreement of h and h/2
};

/// ∫_0^∞ u^k [K++(u,u) - (-1)^k K--(u,u)] du, the kernel side of the signed
/// moment identity (β-points carry sgn(u)^k·|u|^k = (-1)^k |u|^k).
double diag_moment(int k, const Parameters& params, const DiagMomentOptions& opts = {});

struct PairMoment {
  double single = 0.0;  // ∫ f_k f_l ρ̃_1, the coincident-point part
  double pair = 0.0;    // ∬ f_k(u) f_l(v) ρ̃_2(u, v)
  double total() const { return single + pair; }
};

/// Kernel side of (t)_{k+l} E[p̃_k p̃_l] with f_k(u) = sgn(u) u^k on signed
/// coordinates.  Both integrals are checked under one step halving.
PairMoment pair_moment(int k, int l, const Parameters& params, const DiagMomentOptions& opts = {});

// Near x = 0, L acts as a convolution in log x decaying like e^{-(1/2-|a|)|Δ|};
// the buffer absorbs the truncation edge before the compared window starts.
struct ResolventOptions {
  double h = 0.45;
  double window_s_min = -10.0;
  int window_nodes = 64;
  int buffer_nodes = 200;
};

struct ResolventReport {
  double max_error = 0.0;
  int window_nodes = 0;
  int grid_nodes = 0;
};

/// max |K - L/(1+L)| over the comparison window (unweighted kernel values).
ResolventReport resolvent_identity_error(const Parameters& params,
                                         const ResolventOptions& opts = {});

struct TailLimitRow {
  double M = 0.0;
  double sup_error = 0.0;
};

/// sup over the (ξ, η) grid and all blocks of |K'(ξ+M, η+M) - 𝒦(ξ, η)| with
/// K'(ξ, η) = K(x, y) sqrt(xy)/c and x = e^{-ξ/c}.
std::vector<TailLimitRow> tail_limit_check(std::span<const double> ms,
                                           std::span<const std::pair<double, double>> grid,
                                           const Parameters& params);

/// K'(ξ, η) at finite M-shift, blockwise.
Block2 rescaled_kernel(double xi, double eta, const Parameters& params);

struct TailResolventOptions {
  double step = 0.25;          // in units of 1/B
  double half_width = 40.0;    // in units of 1/B
  double probe_half_width = 1.0;
};

/// max over probe nodes |𝒦 - 𝓛/(1+𝓛)| on a truncated uniform ξ grid.
double tail_resolvent_error(const Parameters& params, const TailResolventOptions& opts = {});

enum class SpectralOperator { a_kernel, kpp };

struct SpectralOptions {
  double h = 0.2;
  double s_min = -60.0;
  double s_max = 80.0;
  std::vector<double> probes = {0.2, 0.5, 1.0, 2.0, 4.0};
};

/// max_i |(T f)(x_i) - λ g(x_i)| / max_i |λ g(x_i)|: for A, f = f_{-a,m} and
/// g = f_{a,m}; for K++, f = g = f_{a,m}.  λ is the predicted Γ-factor.
double spectral_relation_error(const Parameters& params, double m, SpectralOperator op,
                               const SpectralOptions& opts = {});

}  // namespace zmw

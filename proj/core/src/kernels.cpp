#include "zmw/kernels.hpp"

#include <cmath>
#include <numbers>

#include "zmw/error.hpp"

namespace zmw {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNearDiagonal = 1e-4;
enum { kAp = 0, kBp = 1, kAm = 2, kBm = 3 };

void require_small_a(const Parameters& params, const char* what) {
  if (!(std::fabs(params.a()) < 0.5)) {
    throw AdmissibilityError(std::string(what) + " needs |a| < 1/2; got " + params.describe());
  }
}

double laguerre_orthonormal(int k, double alpha, double x) {
  const double norm = 0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + alpha + 1.0));
  return std::exp(norm + 0.5 * alpha * std::log(x) - 0.5 * x) * laguerre_poly(k, alpha, x);
}

}  // namespace

KernelPoint KernelPoint::from_signed(double u) {
  if (u == 0.0 || !std::isfinite(u)) throw DomainError("kernel point must be nonzero and finite");
  return u > 0.0 ? KernelPoint{Side::plus, u} : KernelPoint{Side::minus, -u};
}

MatrixWhittakerKernel::MatrixWhittakerKernel(const Parameters& params)
    : params_(params),
      kappa_{params.a() + 0.5, params.a() - 0.5, -params.a() + 0.5, -params.a() - 0.5},
      pre_pp_(params.inv_gamma_product()),
      pre_mm_(params.inv_gamma_product_negated()),
      sigma_over_pi_(params.sigma() / kPi) {
  solvers_.reserve(4);
  for (double k : kappa_) solvers_.emplace_back(k, params.mu_squared());
}

WhittakerJet MatrixWhittakerKernel::jet(double x) const {
  WhittakerJet j;
  j.x = x;
  for (int i = 0; i < 4; ++i) {
    const WhittakerValue v = solvers_[i](x);
    j.w[i] = v.value;
    j.dw[i] = v.derivative;
  }
  return j;
}

std::vector<WhittakerJet> MatrixWhittakerKernel::jets(std::span<const double> xs) const {
  std::vector<WhittakerJet> out(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) out[k].x = xs[k];
  for (int i = 0; i < 4; ++i) {
    const std::vector<WhittakerValue> vals = solvers_[i].evaluate(xs);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      out[k].w[i] = vals[k].value;
      out[k].dw[i] = vals[k].derivative;
    }
  }
  return out;
}

// W'' = q W with q = 1/4 - κ/x + (μ² - 1/4)/x².
double MatrixWhittakerKernel::q(int idx, double x) const {
  return 0.25 - kappa_[idx] / x + (params_.mu_squared() - 0.25) / (x * x);
}

double MatrixWhittakerKernel::dq(int idx, double x) const {
  return kappa_[idx] / (x * x) - 2.0 * (params_.mu_squared() - 0.25) / (x * x * x);
}

double MatrixWhittakerKernel::difference_block(int f, int g, double pre, const WhittakerJet& jx,
                                               const WhittakerJet& jy) const {
  if (pre == 0.0) return 0.0;
  const double x = jx.x;
  const double y = jy.x;
  if (x == y) {
    return pre * (jx.dw[f] * jx.w[g] - jx.w[f] * jx.dw[g]) / x;
  }
  if (std::fabs(x - y) >= kNearDiagonal * (x + y)) {
    return pre * (jx.w[f] * jy.w[g] - jx.w[g] * jy.w[f]) / ((x - y) * std::sqrt(x * y));
  }
  // [f(m+h)g(m-h) - g(m+h)f(m-h)] / 2h
  //   = (f'g - fg') + h²/6 [f'''g - fg''' + 3(f'g'' - f''g')] + O(h⁴)
  const double m = 0.5 * (x + y);
  const double h = 0.5 * (x - y);
  const WhittakerJet jm = jet(m);
  const double fv = jm.w[f], gv = jm.w[g];
  const double f1 = jm.dw[f], g1 = jm.dw[g];
  const double f2 = q(f, m) * fv, g2 = q(g, m) * gv;
  const double f3 = dq(f, m) * fv + q(f, m) * f1;
  const double g3 = dq(g, m) * gv + q(g, m) * g1;
  const double quotient =
      (f1 * gv - fv * g1) + h * h / 6.0 * (f3 * gv - fv * g3 + 3.0 * (f1 * g2 - f2 * g1));
  return pre * quotient / std::sqrt(x * y);
}

double MatrixWhittakerKernel::value(Side su, const WhittakerJet& jx, Side sv,
                                    const WhittakerJet& jy) const {
  const double x = jx.x;
  const double y = jy.x;
  if (su == Side::plus && sv == Side::plus) return difference_block(kAp, kBp, pre_pp_, jx, jy);
  if (su == Side::minus && sv == Side::minus) return difference_block(kAm, kBm, pre_mm_, jx, jy);
  const double t = params_.t();
  const double scale = sigma_over_pi_ / ((x + y) * std::sqrt(x * y));
  if (su == Side::plus) {
    return scale * (jx.w[kAp] * jy.w[kAm] + t * jx.w[kBp] * jy.w[kBm]);
  }
  return -scale * (jy.w[kAp] * jx.w[kAm] + t * jy.w[kBp] * jx.w[kBm]);
}

double MatrixWhittakerKernel::operator()(const KernelPoint& u, const KernelPoint& v) const {
  if (!(u.x > 0.0) || !(v.x > 0.0)) throw DomainError("kernel points need x > 0");
  const WhittakerJet jx = jet(u.x);
  const WhittakerJet jy = u.x == v.x ? jx : jet(v.x);
  return value(u.side, jx, v.side, jy);
}

Block2 MatrixWhittakerKernel::evaluate(double x, double y) const {
  const WhittakerJet jx = jet(x);
  const WhittakerJet jy = x == y ? jx : jet(y);
  return Block2{{{value(Side::plus, jx, Side::plus, jy), value(Side::plus, jx, Side::minus, jy)},
                 {value(Side::minus, jx, Side::plus, jy),
                  value(Side::minus, jx, Side::minus, jy)}}};
}

double whittaker_kernel(const KernelPoint& u, const KernelPoint& v, const Parameters& params) {
  return MatrixWhittakerKernel(params)(u, v);
}

double a_kernel(double x, double y, const Parameters& params) {
  require_small_a(params, "A-kernel");
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("A-kernel needs x, y > 0");
  return params.sigma() / kPi * std::exp(params.a() * std::log(x / y) - 0.5 * (x + y)) / (x + y);
}

Block2 l_kernel_blocks(double x, double y, const Parameters& params) {
  return Block2{{{0.0, a_kernel(x, y, params)}, {-a_kernel(y, x, params), 0.0}}};
}

double l_kernel(const KernelPoint& u, const KernelPoint& v, const Parameters& params) {
  require_small_a(params, "L-kernel");
  if (u.side == v.side) return 0.0;
  if (u.side == Side::plus) return a_kernel(u.x, v.x, params);
  return -a_kernel(v.x, u.x, params);
}

double spectral_eigenfunction(double m, double a, double x) {
  return WhittakerSolver(a, -m * m)(x).value / x;
}

double a_eigenvalue(double m, const Parameters& params) {
  return params.sigma() / kPi * std::exp(2.0 * log_gamma(cplx(0.5 - params.a(), m)).real());
}

double kpp_eigenvalue(double m, const Parameters& params) {
  const double mu2 = params.mu_squared();
  const double r = std::sqrt(std::fabs(mu2));
  const double cos_mu = mu2 >= 0.0 ? std::cos(2.0 * kPi * r) : std::cosh(2.0 * kPi * r);
  return (cos_mu - std::cos(2.0 * kPi * params.a())) / (cos_mu + std::cosh(2.0 * kPi * m));
}

double laguerre_kernel(int n, double alpha, double x, double y) {
  if (n < 1) throw DomainError("laguerre_kernel: order must be positive");
  if (!(alpha > -1.0)) throw DomainError("laguerre_kernel: alpha must exceed -1");
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("laguerre_kernel: x, y must be positive");
  if (std::fabs(x - y) < 1e-6 * (x + y)) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      acc += laguerre_orthonormal(k, alpha, x) * laguerre_orthonormal(k, alpha, y);
    }
    return acc;
  }
  // Leading-coefficient ratio k_{N-1}/k_N = -sqrt(N (N + α)).
  const double ratio = -std::sqrt(n * (n + alpha));
  const double num = laguerre_orthonormal(n, alpha, x) * laguerre_orthonormal(n - 1, alpha, y) -
                     laguerre_orthonormal(n - 1, alpha, x) * laguerre_orthonormal(n, alpha, y);
  return ratio * num / (x - y);
}

}  // namespace zmw

#include <cmath>
#include <numbers>

#include "zmw/error.hpp"
#include "zmw/specfun.hpp"

namespace zmw {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-17;
constexpr int kMaxIter = 10000;

// 1/Γ(1+x) = Σ c_k x^k near x = 0.
constexpr double kRecipGamma[] = {
    1.0,
    0.5772156649015328606,
    -0.6558780715202538811,
    -0.0420026350340952355,
    0.1665386113822914895,
    -0.0421977345555443367,
    -0.0096219715278769736,
    0.0072189432466630995,
};

struct TemmeGammas {
  double gam1;   // (1/Γ(1-μ) - 1/Γ(1+μ)) / (2μ)
  double gam2;   // (1/Γ(1-μ) + 1/Γ(1+μ)) / 2
  double gampl;  // 1/Γ(1+μ)
  double gammi;  // 1/Γ(1-μ)
};

TemmeGammas temme_gammas(double mu) {
  TemmeGammas g{};
  if (std::fabs(mu) < 1e-3) {
    const double m2 = mu * mu;
    const double* c = kRecipGamma;
    const double even = c[0] + m2 * (c[2] + m2 * (c[4] + m2 * c[6]));
    const double odd = c[1] + m2 * (c[3] + m2 * (c[5] + m2 * c[7]));
    g.gam1 = -odd;
    g.gam2 = even;
    g.gampl = even + mu * odd;
    g.gammi = even - mu * odd;
    return g;
  }
  g.gampl = std::exp(-log_gamma(1.0 + mu));
  g.gammi = std::exp(-log_gamma(1.0 - mu));
  g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
  g.gam2 = 0.5 * (g.gammi + g.gampl);
  return g;
}

}  // namespace

// Temme's series for x <= 2 and Steed's continued fraction beyond, each
// producing K_μ and K_{μ+1} with |μ| <= 1/2, then forward recurrence in ν.
double bessel_k(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
  nu = std::fabs(nu);
  const int nl = static_cast<int>(nu + 0.5);
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;

  double rkmu = 0.0;
  double rk1 = 0.0;
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * xmu;
    const double fact = std::fabs(pimu) < 1e-15 ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = xmu * d;
    const double fact2 = std::fabs(e) < 1e-15 ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(xmu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - xmu2);
      c *= d / i;
      p /= i - xmu;
      q /= i + xmu;
      const double del = c * ff;
      sum += del;
      sum1 += c * (p - i * ff);
      if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel_k: Temme series did not converge");
    rkmu = sum;
    rk1 = sum1 * xi2;
  } else {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - xmu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
      a -= 2.0 * (i - 1);
      c = -a * c / i;
      const double qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0;
      d = 1.0 / (b + a * d);
      delh = (b * d - 1.0) * delh;
      h += delh;
      const double dels = q * delh;
      s += dels;
      if (std::fabs(dels / s) < kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel_k: continued fraction did not converge");
    h = a1 * h;
    rkmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
  }
  for (int i = 1; i <= nl; ++i) {
    const double next = (xmu + i) * xi2 * rk1 + rkmu;
    rkmu = rk1;
    rk1 = next;
  }
  return rkmu;
}

}  // namespace zmw

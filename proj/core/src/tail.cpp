#include "zmw/tail.hpp"

#include <cmath>
#include <numbers>

#include "zmw/error.hpp"

namespace zmw {
namespace {

constexpr double kPi = std::numbers::pi;

// sin(2πμ)/(2πμ) as a function of μ².
double sinc_2pi_mu(double mu2) {
  if (mu2 == 0.0) return 1.0;
  const double m = std::sqrt(std::fabs(mu2));
  const double arg = 2.0 * kPi * m;
  return mu2 > 0.0 ? std::sin(arg) / arg : std::sinh(arg) / arg;
}

double sin_pi_mu_over_mu(double mu2) {
  if (mu2 == 0.0) return kPi;
  const double m = std::sqrt(std::fabs(mu2));
  return mu2 > 0.0 ? std::sin(kPi * m) / m : std::sinh(kPi * m) / m;
}

double cos_pi_mu(double mu2) {
  const double m = std::sqrt(std::fabs(mu2));
  return mu2 >= 0.0 ? std::cos(kPi * m) : std::cosh(kPi * m);
}

// sinh(Aζ)/(A·D(Bζ)) and cosh(Aζ)/D(Bζ) with D = sinh or cosh, written to
// survive large |ζ| (|A| < B always holds for admissible parameters).
struct HyperbolicRatios {
  double a2;
  double b;

  double shc_over(double zeta, bool denominator_sinh) const {
    const double x = std::fabs(zeta);
    const double sgn = zeta < 0.0 ? -1.0 : 1.0;
    const double bx = b * x;
    const double denom_sign = denominator_sinh ? sgn : 1.0;
    if (a2 < 0.0) {
      const double r = std::sqrt(-a2);
      if (bx > 700.0) return 0.0;
      const double d = denominator_sinh ? std::sinh(bx) : std::cosh(bx);
      return sgn * std::sin(r * x) / (r * d) * denom_sign;
    }
    const double r = std::sqrt(a2);
    if (bx < 20.0) {
      const double num = r == 0.0 ? x : std::sinh(r * x) / r;
      const double d = denominator_sinh ? std::sinh(bx) : std::cosh(bx);
      return sgn * num / d * denom_sign;
    }
    const double e2b = std::exp(-2.0 * bx);
    const double d = denominator_sinh ? (1.0 - e2b) : (1.0 + e2b);
    const double num = r == 0.0 ? 2.0 * x * std::exp(-bx)
                                : std::exp((r - b) * x) * (1.0 - std::exp(-2.0 * r * x)) / r;
    return sgn * num / d * denom_sign;
  }

  double ch_over_cosh(double zeta) const {
    const double x = std::fabs(zeta);
    const double bx = b * x;
    if (a2 < 0.0) {
      if (bx > 700.0) return 0.0;
      return std::cos(std::sqrt(-a2) * x) / std::cosh(bx);
    }
    const double r = std::sqrt(a2);
    if (bx < 20.0) return std::cosh(r * x) / std::cosh(bx);
    return std::exp((r - b) * x) * (1.0 + std::exp(-2.0 * r * x)) / (1.0 + std::exp(-2.0 * bx));
  }
};

}  // namespace

TailConstants TailConstants::from(const Parameters& params) {
  const double s = sinc_2pi_mu(params.mu_squared());
  const double sigma2 = params.sigma_squared();
  if (!(sigma2 > 0.0) || !(s > 0.0)) {
    throw AdmissibilityError("tail constants need sigma > 0 and sin(2πμ)/μ > 0; got " +
                             params.describe());
  }
  TailConstants tc;
  tc.c = sigma2 / (kPi * kPi * s);
  tc.B = kPi * kPi * s / (2.0 * sigma2);
  tc.a_kind = params.mu_kind();
  tc.a_value = 2.0 * params.mu_value() * tc.B;
  return tc;
}

cplx TailConstants::A() const {
  return a_kind == MuKind::real ? cplx(a_value, 0.0) : cplx(0.0, a_value);
}

double TailConstants::A_squared() const {
  return a_kind == MuKind::real ? a_value * a_value : -a_value * a_value;
}

double tail_f(double zeta, const Parameters& params) {
  if (zeta == 0.0) return 1.0;
  const TailConstants tc = TailConstants::from(params);
  const HyperbolicRatios hr{tc.A_squared(), tc.B};
  return tc.B * hr.shc_over(zeta, true);
}

double tail_g(double zeta, const Parameters& params) {
  const TailConstants tc = TailConstants::from(params);
  const double mu2 = params.mu_squared();
  const double a = params.a();
  const HyperbolicRatios hr{tc.A_squared(), tc.B};
  const double even = sin_pi_mu_over_mu(mu2) * std::cos(kPi * a) * hr.ch_over_cosh(zeta);
  const double odd = std::sin(kPi * a) * cos_pi_mu(mu2) * 2.0 * tc.B * hr.shc_over(zeta, false);
  return (even + odd) / (2.0 * params.sigma());
}

Block2 tail_kernel(double xi, double eta, const Parameters& params) {
  const double d = xi - eta;
  const double f = tail_f(d, params);
  return Block2{{{f, tail_g(-d, params)}, {-tail_g(d, params), f}}};
}

Block2 tail_l_kernel(double xi, double eta, const Parameters& params) {
  const double a = params.a();
  if (!(std::fabs(a) < 0.5)) {
    throw AdmissibilityError("tail L-kernel needs |a| < 1/2; got " + params.describe());
  }
  const TailConstants tc = TailConstants::from(params);
  const double pref = params.sigma() * tc.B / kPi;
  const double d = tc.B * (xi - eta);
  const double decay = 1.0 + std::exp(-2.0 * std::fabs(d));
  const double pm = pref * 2.0 * std::exp(-2.0 * a * d - std::fabs(d)) / decay;
  const double mp = -pref * 2.0 * std::exp(2.0 * a * d - std::fabs(d)) / decay;
  return Block2{{{0.0, pm}, {mp, 0.0}}};
}

}  // namespace zmw

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace zmw {

using cplx = std::complex<double>;

/// Principal branch of log Γ(w). Throws DomainError at w = 0, -1, -2, ...
cplx log_gamma(cplx w);
/// log |Γ(x)| for real x, with the sign of Γ(x) written to *sign when given.
double log_gamma(double x, int* sign = nullptr);

/// ψ(w) = Γ'(w)/Γ(w).
double digamma(double w);
cplx digamma(cplx w);

/// Rising factorial (a)_m = a(a+1)...(a+m-1), (a)_0 = 1.
double pochhammer(double a, int m);
cplx pochhammer(cplx a, int m);

enum class MuKind { real, imaginary };

// μ enters W_{κ,μ} only through μ², so a real and a pure-imaginary μ share
// one representation: μ² = +m² or -m².
struct WhittakerArgs {
  double kappa = 0.0;
  MuKind mu_kind = MuKind::real;
  double mu_magnitude = 0.0;
  double x = 1.0;

  double mu_squared() const {
    return mu_kind == MuKind::real ? mu_magnitude * mu_magnitude
                                   : -mu_magnitude * mu_magnitude;
  }
};

struct WhittakerValue {
  double value = 0.0;
  double derivative = 0.0;
  // False when (κ, μ, x) lies outside |κ| <= 5, |μ| <= 5, x in [1e-4, 100].
  bool validated = true;
};

WhittakerValue whittaker_eval(const WhittakerArgs& args);
double whittaker_w(const WhittakerArgs& args);
double whittaker_w_deriv(const WhittakerArgs& args);

bool whittaker_in_validated_box(double kappa, double mu_squared, double x);

/**
 * Evaluates W_{κ,μ} and dW/dx for a fixed parameter pair on many points.
 *
 * The value at each x is obtained by continuing the Whittaker equation
 *   y'' = (1/4 - κ/x + (μ² - 1/4)/x²) y
 * with local Taylor series from a start point where the large-x asymptotic
 * expansion has converged to machine precision.  Moving toward the origin
 * the solution recessive at +∞ dominates, so the march is stable.
 * Evaluating sorted points in one sweep shares the continuation.
 */
class WhittakerSolver {
 public:
  WhittakerSolver(double kappa, double mu_squared);

  WhittakerValue operator()(double x) const;
  std::vector<WhittakerValue> evaluate(std::span<const double> xs) const;

  double kappa() const { return kappa_; }
  double mu_squared() const { return mu2_; }
  double start_point() const { return x_start_; }

 private:
  struct State {
    double x;
    double y;
    double dy;
  };
  bool asymptotic(double x, State& out) const;
  State step(const State& from, double to) const;

  double kappa_;
  double mu2_;
  double x_start_;
  State start_;
};

/// Generalized Laguerre polynomial L_n^α(x) by the three-term recurrence.
double laguerre_poly(int n, double alpha, double x);

/// Modified Bessel function of the second kind K_ν(x), x > 0.
double bessel_k(double nu, double x);

}  // namespace zmw

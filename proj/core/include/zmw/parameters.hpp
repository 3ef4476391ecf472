#pragma once

#include <string>

#include "zmw/specfun.hpp"

namespace zmw {

/**
 * The pair (z, z') with its derived real quantities
 *   t = z z',  a = (z + z')/2,  μ = (z - z')/2,  σ = sqrt(sin πz · sin πz').
 *
 * principal:     z' = conj(z), z not real-integer; μ is pure imaginary.
 * complementary: z, z' real in one open interval (m, m+1); μ real, |μ| < 1/2.
 * formal:        any real pair, unchecked.  Used for degenerations such as
 *                z' = N, z = N + α where σ vanishes.
 */
class Parameters {
 public:
  enum class Kind { principal, complementary, formal };

  static Parameters principal(cplx z);
  static Parameters complementary(double z, double zprime);
  static Parameters formal(double z, double zprime);
  /// Classifies an arbitrary pair; throws AdmissibilityError when neither
  /// series applies.
  static Parameters from_pair(cplx z, cplx zprime);
  /// z = a + μ, z' = a - μ with μ real or pure imaginary of magnitude m.
  static Parameters from_a_mu(double a, MuKind kind, double mu_magnitude);

  Kind kind() const { return kind_; }
  cplx z() const { return z_; }
  cplx zprime() const { return zp_; }
  double t() const { return t_; }
  double a() const { return a_; }
  MuKind mu_kind() const { return mu_kind_; }
  /// Signed: μ = mu_value() (real) or μ = i·mu_value() (imaginary).
  double mu_value() const { return mu_value_; }
  double mu_squared() const;
  cplx mu() const;
  double sigma() const { return sigma_; }
  double sigma_squared() const { return sigma2_; }

  /// 1/(Γ(z)Γ(z')) and 1/(Γ(-z)Γ(-z')), real; zero at poles.
  double inv_gamma_product() const;
  double inv_gamma_product_negated() const;

  /// (z, z') -> (-z, -z').
  Parameters negated() const;
  /// (z, z') -> (z + N, z' + N).
  Parameters shifted(int n) const;

  std::string describe() const;

 private:
  Parameters(Kind kind, cplx z, cplx zp);

  Kind kind_;
  cplx z_;
  cplx zp_;
  double t_;
  double a_;
  MuKind mu_kind_;
  double mu_value_;
  double sigma2_;
  double sigma_;
};

/// 1/Γ(x) for real x, exactly 0 at nonpositive integers.
double recip_gamma(double x);

}  // namespace zmw

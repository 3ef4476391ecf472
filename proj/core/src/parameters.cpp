#include "zmw/parameters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zmw/error.hpp"

namespace zmw {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(double x) { return std::floor(x) == x; }

}  // namespace

double recip_gamma(double x) {
  if (x <= 0.0 && is_integer(x)) return 0.0;
  int sign = 1;
  const double lg = log_gamma(x, &sign);
  return sign * std::exp(-lg);
}

Parameters::Parameters(Kind kind, cplx z, cplx zp) : kind_(kind), z_(z), zp_(zp) {
  t_ = (z * zp).real();
  a_ = 0.5 * (z + zp).real();
  if (kind == Kind::principal) {
    mu_kind_ = MuKind::imaginary;
    mu_value_ = z.imag();
  } else {
    mu_kind_ = MuKind::real;
    mu_value_ = 0.5 * (z.real() - zp.real());
  }
  sigma2_ = (std::sin(kPi * z) * std::sin(kPi * zp)).real();
  sigma_ = sigma2_ > 0.0 ? std::sqrt(sigma2_) : 0.0;
}

Parameters Parameters::principal(cplx z) {
  if (z.imag() == 0.0) {
    throw AdmissibilityError("principal series needs Im z != 0 (got z=" +
                             std::to_string(z.real()) + "); use the complementary series");
  }
  return Parameters(Kind::principal, z, std::conj(z));
}

Parameters Parameters::complementary(double z, double zprime) {
  const double m = std::floor(z);
  if (!(z > m && zprime > m && zprime < m + 1.0)) {
    std::ostringstream os;
    os << "complementary series needs m < z, z' < m+1 for an integer m (got z=" << z
       << ", z'=" << zprime << ")";
    throw AdmissibilityError(os.str());
  }
  return Parameters(Kind::complementary, z, zprime);
}

Parameters Parameters::formal(double z, double zprime) {
  return Parameters(Kind::formal, z, zprime);
}

Parameters Parameters::from_pair(cplx z, cplx zprime) {
  if (z.imag() == 0.0 && zprime.imag() == 0.0) {
    return complementary(z.real(), zprime.real());
  }
  if (z.imag() != 0.0 && zprime == std::conj(z)) return principal(z);
  std::ostringstream os;
  os << "inadmissible pair z=" << z << ", z'=" << zprime
     << ": need z' = conj(z) or both real in one unit interval";
  throw AdmissibilityError(os.str());
}

Parameters Parameters::from_a_mu(double a, MuKind kind, double mu_magnitude) {
  if (kind == MuKind::imaginary) {
    if (mu_magnitude == 0.0) return complementary(a, a);
    return principal(cplx(a, mu_magnitude));
  }
  return complementary(a + mu_magnitude, a - mu_magnitude);
}

double Parameters::mu_squared() const {
  return mu_kind_ == MuKind::real ? mu_value_ * mu_value_ : -mu_value_ * mu_value_;
}

cplx Parameters::mu() const {
  return mu_kind_ == MuKind::real ? cplx(mu_value_, 0.0) : cplx(0.0, mu_value_);
}

double Parameters::inv_gamma_product() const {
  if (kind_ == Kind::principal) return std::exp(-2.0 * log_gamma(z_).real());
  return recip_gamma(z_.real()) * recip_gamma(zp_.real());
}

double Parameters::inv_gamma_product_negated() const {
  if (kind_ == Kind::principal) return std::exp(-2.0 * log_gamma(-z_).real());
  return recip_gamma(-z_.real()) * recip_gamma(-zp_.real());
}

Parameters Parameters::negated() const { return Parameters(kind_, -z_, -zp_); }

Parameters Parameters::shifted(int n) const {
  return Parameters(kind_, z_ + static_cast<double>(n), zp_ + static_cast<double>(n));
}

std::string Parameters::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "(z=" << z_.real();
  if (z_.imag() != 0.0) os << (z_.imag() > 0 ? "+" : "") << z_.imag() << "i";
  os << ", z'=" << zp_.real();
  if (zp_.imag() != 0.0) os << (zp_.imag() > 0 ? "+" : "") << zp_.imag() << "i";
  os << ")";
  return os.str();
}

}  // namespace zmw

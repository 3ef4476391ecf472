#include "zmw/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "zmw/error.hpp"

namespace zmw {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

// B_{2k} / (2k (2k-1)) for the Stirling series, k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,
    -1.0 / 1680.0,       1.0 / 1188.0,        -691.0 / 360360.0,
    1.0 / 156.0,         -3617.0 / 122400.0,
};

// B_{2k} / (2k) for the digamma asymptotic series, k = 1..8.
constexpr std::array<double, 8> kDigammaAsym = {
    1.0 / 12.0,    -1.0 / 120.0,   1.0 / 252.0,      -1.0 / 240.0,
    1.0 / 132.0,   -691.0 / 32760.0, 1.0 / 12.0,     -3617.0 / 8160.0,
};

constexpr double kShift = 15.0;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::floor(x) == x;
}

template <typename T>
T stirling_log_gamma(T w) {
  const T inv = T(1.0) / w;
  const T inv2 = inv * inv;
  T series = T(0.0);
  T power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + kLogSqrt2Pi + series;
}

template <typename T>
T digamma_asymptotic(T w) {
  const T inv2 = T(1.0) / (w * w);
  T series = T(0.0);
  T power = inv2;
  for (double c : kDigammaAsym) {
    series += c * power;
    power *= inv2;
  }
  return std::log(w) - 0.5 / w - series;
}

}  // namespace

cplx log_gamma(cplx w) {
  if (w.imag() == 0.0 && is_nonpositive_integer(w.real())) {
    throw DomainError("log_gamma: pole at nonpositive integer " +
                      std::to_string(w.real()));
  }
  // Summing principal logs of the shifted factors continues log Γ along a
  // horizontal line from Re w >= 15, which is the principal branch.
  cplx correction(0.0, 0.0);
  while (w.real() < kShift) {
    correction += std::log(w);
    w += 1.0;
  }
  return stirling_log_gamma(w) - correction;
}

double log_gamma(double x, int* sign) {
  if (is_nonpositive_integer(x)) {
    throw DomainError("log_gamma: pole at nonpositive integer " +
                      std::to_string(x));
  }
  if (x < 0.5) {
    const double s = std::sin(kPi * x);
    if (sign != nullptr) *sign = s > 0.0 ? 1 : -1;
    return std::log(kPi / std::fabs(s)) - log_gamma(1.0 - x);
  }
  double correction = 0.0;
  while (x < kShift) {
    correction += std::log(x);
    x += 1.0;
  }
  if (sign != nullptr) *sign = 1;
  return stirling_log_gamma(x) - correction;
}

double digamma(double w) {
  if (is_nonpositive_integer(w)) {
    throw DomainError("digamma: pole at nonpositive integer " +
                      std::to_string(w));
  }
  if (w < 0.5) {
    return digamma(1.0 - w) - kPi / std::tan(kPi * w);
  }
  double acc = 0.0;
  while (w < kShift) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  return acc + digamma_asymptotic(w);
}

cplx digamma(cplx w) {
  if (w.imag() == 0.0) return digamma(w.real());
  if (w.real() < 0.5) {
    return digamma(1.0 - w) - kPi / std::tan(kPi * w);
  }
  cplx acc(0.0, 0.0);
  while (std::abs(w) < kShift) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  return acc + digamma_asymptotic(w);
}

double pochhammer(double a, int m) {
  double r = 1.0;
  for (int k = 0; k < m; ++k) r *= a + k;
  return r;
}

cplx pochhammer(cplx a, int m) {
  cplx r(1.0, 0.0);
  for (int k = 0; k < m; ++k) r *= a + static_cast<double>(k);
  return r;
}

double laguerre_poly(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre_poly: negative degree");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace zmw

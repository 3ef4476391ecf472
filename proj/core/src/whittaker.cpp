#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "zmw/error.hpp"
#include "zmw/specfun.hpp"

namespace zmw {
namespace {

constexpr double kSeriesTol = 1e-17;
constexpr int kMaxAsymptoticTerms = 400;
constexpr int kMaxTaylorTerms = 400;
// Taylor steps stay within 40% of the distance to the singular point x = 0.
constexpr double kRelativeStep = 0.4;
constexpr double kMaxStep = 2.0;
constexpr double kMaxStart = 700.0;

std::string describe(double kappa, double mu2, double x) {
  std::ostringstream os;
  os << "(kappa=" << kappa << ", mu^2=" << mu2 << ", x=" << x << ")";
  return os.str();
}

}  // namespace

bool whittaker_in_validated_box(double kappa, double mu_squared, double x) {
  return std::fabs(kappa) <= 5.0 && std::fabs(mu_squared) <= 25.0 &&
         x >= 1e-4 && x <= 100.0;
}

WhittakerSolver::WhittakerSolver(double kappa, double mu_squared)
    : kappa_(kappa), mu2_(mu_squared), x_start_(0.0), start_{} {
  double x = std::max(30.0, 2.0 * (kappa * kappa + std::fabs(mu_squared)) + 20.0);
  while (!asymptotic(x, start_)) {
    x *= 1.5;
    if (x > kMaxStart) {
      throw ConvergenceError("whittaker: asymptotic expansion did not converge " +
                             describe(kappa, mu_squared, x));
    }
  }
  x_start_ = x;
}

// W ~ e^{-x/2} x^κ Σ_k (1/2+μ-κ)_k (1/2-μ-κ)_k / (k! (-x)^k); the product of
// the two Pochhammer factors is Π_j ((j+1/2-κ)² - μ²), real for μ² real.
bool WhittakerSolver::asymptotic(double x, State& out) const {
  double sum = 1.0;
  double dsum = 0.0;
  double term = 1.0;
  bool converged = false;
  for (int k = 0; k < kMaxAsymptoticTerms; ++k) {
    const double shift = k + 0.5 - kappa_;
    const double next = term * (shift * shift - mu2_) / ((k + 1.0) * -x);
    if (next == 0.0) {
      converged = true;
      break;
    }
    if (k > 2 && std::fabs(next) > std::fabs(term)) break;
    term = next;
    sum += term;
    dsum -= (k + 1.0) * term / x;
    if (std::fabs(term) < kSeriesTol * std::fabs(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;
  const double envelope = std::exp(-0.5 * x + kappa_ * std::log(x));
  out.x = x;
  out.y = envelope * sum;
  out.dy = out.y * (-0.5 + kappa_ / x) + envelope * dsum;
  return true;
}

WhittakerSolver::State WhittakerSolver::step(const State& from, double to) const {
  const double x0 = from.x;
  const double s = to - x0;
  const double q0 = 0.25 * x0 * x0 - kappa_ * x0 + mu2_ - 0.25;
  const double q1 = 0.5 * x0 - kappa_;
  const double q2 = 0.25;
  const double s2 = s * s;
  const double denom0 = x0 * x0;

  // b_n = a_n s^n where y(x0 + s) = Σ a_n s^n.
  double bm2 = 0.0;
  double bm1 = 0.0;
  double b0 = from.y;
  double b1 = from.dy * s;
  double y = b0 + b1;
  double dys = b1;
  for (int k = 0; k < kMaxTaylorTerms; ++k) {
    const double b2 = ((q0 - k * (k - 1.0)) * b0 * s2 + q1 * bm1 * s2 * s +
                       q2 * bm2 * s2 * s2 - 2.0 * x0 * (k + 1.0) * k * b1 * s) /
                      (denom0 * (k + 2.0) * (k + 1.0));
    y += b2;
    dys += (k + 2.0) * b2;
    bm2 = bm1;
    bm1 = b0;
    b0 = b1;
    b1 = b2;
    const double scale = std::fabs(y) + std::fabs(dys);
    if (k > 2 && (k + 2.0) * (std::fabs(b1) + std::fabs(b0)) <= kSeriesTol * scale) {
      return State{to, y, dys / s};
    }
  }
  throw ConvergenceError("whittaker: Taylor continuation did not converge " +
                         describe(kappa_, mu2_, to));
}

WhittakerValue WhittakerSolver::operator()(double x) const {
  const double xs[1] = {x};
  return evaluate(xs).front();
}

std::vector<WhittakerValue> WhittakerSolver::evaluate(std::span<const double> xs) const {
  std::vector<WhittakerValue> out(xs.size());
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return xs[i] > xs[j]; });

  State cur = start_;
  for (std::size_t idx : order) {
    const double x = xs[idx];
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw DomainError("whittaker: x must be positive and finite " +
                        describe(kappa_, mu2_, x));
    }
    State at{};
    if (x >= x_start_) {
      if (!asymptotic(x, at)) {
        throw ConvergenceError("whittaker: asymptotic expansion failed " +
                               describe(kappa_, mu2_, x));
      }
    } else {
      while (cur.x > x) {
        const double h = std::min(kRelativeStep * cur.x, kMaxStep);
        cur = step(cur, std::max(x, cur.x - h));
      }
      at = cur;
    }
    out[idx] = WhittakerValue{at.y, at.dy, whittaker_in_validated_box(kappa_, mu2_, x)};
  }
  return out;
}

WhittakerValue whittaker_eval(const WhittakerArgs& args) {
  if (!(args.x > 0.0)) {
    throw DomainError("whittaker_w: x must be positive, got " + std::to_string(args.x));
  }
  if (args.mu_magnitude < 0.0) {
    throw DomainError("whittaker_w: mu magnitude must be nonnegative");
  }
  return WhittakerSolver(args.kappa, args.mu_squared())(args.x);
}

double whittaker_w(const WhittakerArgs& args) { return whittaker_eval(args).value; }

double whittaker_w_deriv(const WhittakerArgs& args) {
  return whittaker_eval(args).derivative;
}

}  // namespace zmw

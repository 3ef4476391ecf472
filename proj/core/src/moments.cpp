#include "zmw/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "zmw/error.hpp"
#include "zmw/partitions.hpp"
#include "zmw/quadrature.hpp"
#include "zmw/tail.hpp"

namespace zmw {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMuRichardsonCut = 1e-4;
constexpr double kMuRichardsonStep = 1e-2;

cplx alpha_mass_formula(cplx z, cplx zp) {
  const cplx d = z - zp;
  const cplx sd = std::sin(kPi * d);
  const cplx pref = std::sin(kPi * z) * std::sin(kPi * zp);
  const cplx first = d / (2.0 * kPi * sd) * (z + zp - 1.0) / (z * zp);
  const cplx second = (digamma(-zp) - digamma(-z)) / (kPi * sd);
  return pref * (first + second);
}

// The formula is even in μ at fixed a and has a removable 0/0 at μ = 0.
double alpha_mass_at_zero_mu(double a) {
  auto f = [a](double h) { return alpha_mass_formula(cplx(a + h), cplx(a - h)).real(); };
  const double h = kMuRichardsonStep;
  const double f1 = f(h);
  const double f2 = f(h / 2);
  const double f3 = f(h / 4);
  const double r1 = (4.0 * f2 - f1) / 3.0;
  const double r2 = (4.0 * f3 - f2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

void check_rho1_domain(const Parameters& params) {
  const double rz = params.z().real();
  const double rzp = params.zprime().real();
  if (!(params.t() > 1.0) || !(rz > -1.0 && rz < 1.0) || !(rzp > -1.0 && rzp < 1.0)) {
    throw AdmissibilityError(
        "rho1: the integral representation needs t > 1 and -1 < Re z, Re z' < 1; got " +
        params.describe() + " (analytic continuation is not implemented)");
  }
}

// Σ over Gauss–Legendre panels of width ≤ max_width covering [lo, hi].
template <typename T, typename F>
T panel_sum(double lo, double hi, double max_width, const QuadratureRule& rule, F&& f) {
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
  const double width = (hi - lo) / panels;
  T acc{};
  for (int k = 0; k < panels; ++k) {
    const double left = lo + k * width;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      acc += 0.5 * width * rule.weights[i] * f(left + 0.5 * width * (1.0 + rule.nodes[i]));
    }
  }
  return acc;
}

// Everything oscillates like (·)^{±i Im z} in the logarithmic variables, so
// the lower halves of all three integrals use panels in log scale whose width
// shrinks like 1/|Im z|; the upper halves carry the algebraic endpoint
// factors in Gauss–Jacobi weights.
class Rho1Integrator {
 public:
  Rho1Integrator(const Parameters& params, const Rho1Options& opts)
      : z_(params.z()),
        zp_(params.zprime()),
        t_(params.t()),
        a_(params.a()),
        pref_((params.t() - 1.0) * params.sigma_squared() / (kPi * kPi)),
        panel_(gauss_legendre(opts.panel_nodes)),
        width_(std::min(opts.panel_width, 6.0 / (1.0 + 2.0 * std::fabs(params.z().imag())))),
        upper_u_(gauss_jacobi(opts.jacobi_nodes, params.t() - 2.0, 0.0)),
        upper_x_(gauss_jacobi(opts.jacobi_nodes, params.t() - 2.0 * params.a(), 0.0)) {}

  // ρ_1(x) = (t-1)σ²/π² ∫_x^1 (1-u)^{t-2} S^{1-2a} I(S) du/u, S = u/x - 1,
  // I(S) = ∫_0^1 θ^{-z} (1-θ)^{-z'} (1+Sθ)^{z'} (1+S(1-θ))^z dθ.
  double operator()(double x) const {
    const double half = 0.5 * (1.0 - x);

    // u < (1+x)/2 in v = log S: du/u = x S dv/u, decaying like S^{2-2a} as v → -∞.
    // Whole panels sit on the lattice kW, so I(S) is shared across x.
    const double v_hi = std::log(half / x);
    const double v_lo = std::min(0.0, v_hi) - 36.0 / (2.0 - 2.0 * a_);
    auto lower = [&](double v, cplx i_s) {
      const double s = std::exp(v);
      const double u = x * (1.0 + s);
      return std::pow(1.0 - u, t_ - 2.0) * std::pow(s, 2.0 - 2.0 * a_) * (x / u) * i_s;
    };
    const long k_lo = static_cast<long>(std::floor(v_lo / width_));
    const long k_hi = static_cast<long>(std::floor(v_hi / width_));
    cplx acc(0.0, 0.0);
    for (long k = k_lo; k < k_hi; ++k) {
      const std::vector<cplx>& cached = lattice_panel(k);
      for (std::size_t i = 0; i < panel_.size(); ++i) {
        const double v = (k + 0.5 * (1.0 + panel_.nodes[i])) * width_;
        acc += 0.5 * width_ * panel_.weights[i] * lower(v, cached[i]);
      }
    }
    acc += panel_sum<cplx>(k_hi * width_, v_hi, width_, panel_,
                           [&](double v) { return lower(v, inner(std::exp(v))); });

    // u = 1 - q(1-ξ), q = half/2, Jacobi weight (1-ξ)^{t-2}.
    const double q = 0.5 * half;
    const double jac = std::pow(q, t_ - 1.0);
    for (std::size_t i = 0; i < upper_u_.size(); ++i) {
      const double u = 1.0 - q * (1.0 - upper_u_.nodes[i]);
      const double s = (u - x) / x;
      acc += jac * upper_u_.weights[i] * std::pow(s, 1.0 - 2.0 * a_) * inner(s) / u;
    }

    const cplx value = pref_ * acc;
    if (std::fabs(value.imag()) > 1e-8 * std::fabs(value.real()) + 1e-300) {
      std::ostringstream os;
      os << "rho1: imaginary residue " << value.imag() << " at x=" << x;
      throw ConvergenceError(os.str());
    }
    return value.real();
  }

  // ∫_0^1 x ρ_1(x) dx.  x ρ_1(x) tends to a constant at 0, so x < e^{-37}
  // is below round-off; near 1, ρ_1(x) = (1-x)^{t-2a} × smooth.
  double first_moment() const {
    double acc = panel_sum<double>(-37.0, -std::numbers::ln2, width_, panel_, [&](double w) {
      const double x = std::exp(w);
      return x * x * (*this)(x);
    });
    for (std::size_t i = 0; i < upper_x_.size(); ++i) {
      const double x = 1.0 - 0.25 * (1.0 - upper_x_.nodes[i]);
      const double r = (*this)(x) / std::pow(1.0 - x, t_ - 2.0 * a_);
      acc += std::pow(0.25, t_ - 2.0 * a_ + 1.0) * upper_x_.weights[i] * x * r;
    }
    return acc;
  }

 private:
  const std::vector<cplx>& lattice_panel(long k) const {
    auto [it, fresh] = lattice_.try_emplace(k);
    if (fresh) {
      for (std::size_t i = 0; i < panel_.size(); ++i) {
        it->second.push_back(inner(std::exp((k + 0.5 * (1.0 + panel_.nodes[i])) * width_)));
      }
    }
    return it->second;
  }

  // I(S) = H(z, z'; S) + H(z', z; S), the two halves θ < ½ and θ > ½.
  cplx inner(double s) const { return half_inner(z_, zp_, s) + half_inner(zp_, z_, s); }

  // H = ∫_0^½ θ^{-z} g(θ) dθ, g = (1-θ)^{-z'} (1+Sθ)^{z'} (1+S(1-θ))^z.
  // Panels in log θ down to θ_c = e^{-10}/(1+S); below θ_c, g is replaced by
  // its second-order expansion and integrated exactly.
  cplx half_inner(cplx z, cplx zp, double s) const {
    const double w_lo = -10.0 - std::log1p(s);
    cplx acc = panel_sum<cplx>(w_lo, -std::numbers::ln2, width_, panel_, [&](double w) {
      const double th = std::exp(w);
      return std::exp((1.0 - z) * w - zp * std::log1p(-th) + zp * std::log1p(s * th) +
                      z * std::log1p(s * (1.0 - th)));
    });
    const double r = s / (1.0 + s);
    const cplx c1 = zp * s + zp - z * r;
    const cplx c2 = 0.5 * (zp - zp * s * s - z * r * r) + 0.5 * c1 * c1;
    auto moment = [&](double k) { return std::exp((k - z) * w_lo) / (k - z); };
    acc += std::exp(z * std::log1p(s)) * (moment(1.0) + c1 * moment(2.0) + c2 * moment(3.0));
    return acc;
  }

  cplx z_;
  cplx zp_;
  double t_;
  double a_;
  double pref_;
  QuadratureRule panel_;
  double width_;
  QuadratureRule upper_u_;
  QuadratureRule upper_x_;
  mutable std::unordered_map<long, std::vector<cplx>> lattice_;
};

}  // namespace

double sigma_moment(const std::vector<int>& ls, const Parameters& params) {
  std::vector<int> parts;
  int n = 0;
  for (int l : ls) {
    if (l < 0) throw DomainError("sigma_moment: indices must be nonnegative");
    parts.push_back(l + 1);
    n += l + 1;
  }
  if (n > kMaxCharacterSum) {
    throw GuardError("sigma_moment: Σ(l_i+1)=" + std::to_string(n) + " exceeds the guard " +
                     std::to_string(kMaxCharacterSum));
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  const Partition rho(parts);
  double acc = 0.0;
  for (const Partition& lambda : enumerate_partitions(n)) {
    const std::int64_t chi = character(lambda, rho);
    if (chi != 0) acc += static_cast<double>(chi) * phi(lambda, params);
  }
  return acc;
}

double lifted_moment_combinatorial(const std::vector<int>& ls, const Parameters& params) {
  std::vector<int> shifted;
  int total = 0;
  for (int l : ls) {
    if (l < 1) throw DomainError("lifted_moment_combinatorial: indices must be positive");
    shifted.push_back(l - 1);
    total += l;
  }
  return pochhammer(params.t(), total) * sigma_moment(shifted, params);
}

double expected_alpha_mass(const Parameters& params) {
  if (std::fabs(params.mu_value()) < kMuRichardsonCut) {
    return alpha_mass_at_zero_mu(params.a());
  }
  const cplx value = alpha_mass_formula(params.z(), params.zprime());
  if (std::fabs(value.imag()) > 1e-10 * std::fabs(value.real()) + 1e-14) {
    throw ConvergenceError("expected_alpha_mass: complex result for " + params.describe());
  }
  return value.real();
}

double expected_beta_mass(const Parameters& params) {
  return expected_alpha_mass(params.negated());
}

double decay_constant(const Parameters& params) {
  return std::exp(-2.0 * TailConstants::from(params).B);
}

double rho1_positive(double x, const Parameters& params, const Rho1Options& opts) {
  check_rho1_domain(params);
  if (!(x > 0.0 && x < 1.0)) throw DomainError("rho1: x must lie in (0, 1)");
  return Rho1Integrator(params, opts)(x);
}

double rho1_first_moment(const Parameters& params, const Rho1Options& opts) {
  check_rho1_domain(params);
  return Rho1Integrator(params, opts).first_moment();
}

}  // namespace zmw

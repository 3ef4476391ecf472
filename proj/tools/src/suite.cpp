#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "zmw/error.hpp"
#include "zmw/kernels.hpp"
#include "zmw/moments.hpp"
#include "zmw/operators.hpp"
#include "zmw/partitions.hpp"
#include "zmw/sampler.hpp"
#include "zmw/specfun.hpp"
#include "zmw/tail.hpp"

namespace zmw::cli {
namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  double value = 0.0;
  std::string note;
};

class Runner {
 public:
  explicit Runner(std::vector<Check>& out) : out_(out) {}

  void run(const std::string& module, const std::string& name, double tolerance,
           const std::string& units, const std::function<Outcome()>& body) {
    Check c{module, name, 0.0, tolerance, units, Status::fail, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = body();
      c.value = o.value;
      c.note = o.note;
      c.status = (std::isfinite(o.value) && o.value <= tolerance) ? Status::pass : Status::fail;
    } catch (const AdmissibilityError& e) {
      c.status = Status::skipped;
      c.note = e.what();
    } catch (const std::exception& e) {
      c.status = Status::fail;
      c.note = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(c));
  }

 private:
  std::vector<Check>& out_;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw AdmissibilityError(why);
}

double rel(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

// ---------------------------------------------------------------- specfun

void specfun_checks(Runner& r) {
  r.run("specfun", "whittaker-ode-residual", 1e-6, "relative to largest ODE term", [] {
    const double kappas[] = {-2.0, -0.7, 0.0, 0.45, 1.3};
    const std::pair<MuKind, double> mus[] = {
        {MuKind::real, 0.2}, {MuKind::real, 0.75}, {MuKind::imaginary, 0.4},
        {MuKind::imaginary, 1.5}};
    double worst = 0.0;
    for (double kappa : kappas) {
      for (auto [kind, m] : mus) {
        for (int i = 0; i < 10; ++i) {
          const double x = 1e-3 * std::pow(10.0, 0.5 * i);  // 1e-3 .. ~31.6
          const double h = 1e-4 * x;
          const WhittakerArgs at{kappa, kind, m, x};
          auto dw = [&](double y) {
            WhittakerArgs shifted = at;
            shifted.x = y;
            return whittaker_w_deriv(shifted);
          };
          const double w = whittaker_w(at);
          // Five-point stencil on W'; the plain central difference is
          // truncation-limited (~5e-7) at x ~ 30.
          const double w2 =
              (8.0 * (dw(x + h) - dw(x - h)) - (dw(x + 2.0 * h) - dw(x - 2.0 * h))) / (12.0 * h);
          const double c0 = 0.25 * w;
          const double c1 = -kappa / x * w;
          const double c2 = (at.mu_squared() - 0.25) / (x * x) * w;
          const double scale = std::max({std::fabs(w2), std::fabs(c0), std::fabs(c1), std::fabs(c2)});
          worst = std::max(worst, std::fabs(w2 - c0 - c1 - c2) / scale);
        }
      }
    }
    return Outcome{worst, "200 (kappa, mu, x) samples, x in [1e-3, 31.6]"};
  });

  r.run("specfun", "bessel-identity", 1e-8, "relative", [] {
    double worst = 0.0;
    for (double mu : {0.0, 0.25, 0.5, 1.3, 2.7}) {
      for (double x : {0.01, 0.2, 1.0, 5.0, 20.0, 60.0}) {
        const double w = whittaker_w({0.0, MuKind::real, mu, x});
        const double k = std::sqrt(x / kPi) * bessel_k(mu, 0.5 * x);
        worst = std::max(worst, rel(w, k));
      }
    }
    return Outcome{worst, "W_{0,mu}(x) = sqrt(x/pi) K_mu(x/2)"};
  });

  r.run("specfun", "laguerre-identity", 1e-8, "relative to n! e^{-x/2} x^{(alpha+1)/2} max(1,|L|)",
        [] {
          double worst = 0.0;
          for (int n = 0; n <= 4; ++n) {
            for (double alpha : {0.0, 0.5, 1.0}) {
              for (double x : {0.1, 0.7, 2.0, 5.0, 11.0, 25.0}) {
                const double w =
                    whittaker_w({n + 0.5 * (alpha + 1.0), MuKind::real, 0.5 * alpha, x});
                const double base = std::tgamma(n + 1.0) * std::exp(-0.5 * x) *
                                    std::pow(x, 0.5 * (alpha + 1.0));
                const double l = laguerre_poly(n, alpha, x);
                const double want = (n % 2 ? -1.0 : 1.0) * base * l;
                worst = std::max(worst, std::fabs(w - want) / (base * std::max(1.0, std::fabs(l))));
              }
            }
          }
          return Outcome{worst, "n <= 4, alpha in {0, 1/2, 1}"};
        });

  r.run("specfun", "large-x-asymptotic", 1e-5,
        "|W / (x^kappa e^{-x/2} sum_j c1..cj/(j! x^j)) - 1| at x = 80, j <= 3", [] {
          double worst = 0.0;
          for (double kappa : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            for (double m : {0.0, 0.5, 1.0}) {
              for (MuKind kind : {MuKind::real, MuKind::imaginary}) {
                const double x = 80.0;
                const double mu2 = kind == MuKind::real ? m * m : -m * m;
                const double c1 = mu2 - (kappa - 0.5) * (kappa - 0.5);
                const double c2 = mu2 - (kappa - 1.5) * (kappa - 1.5);
                const double c3 = mu2 - (kappa - 2.5) * (kappa - 2.5);
                const double series =
                    1.0 + c1 / x * (1.0 + c2 / (2.0 * x) * (1.0 + c3 / (3.0 * x)));
                const double w = whittaker_w({kappa, kind, m, x});
                worst = std::max(
                    worst, std::fabs(w / (std::pow(x, kappa) * std::exp(-0.5 * x) * series) - 1.0));
              }
            }
          }
          return Outcome{worst, "three-term expansion"};
        });
}

// ------------------------------------------------------------- partitions

void partition_checks(Runner& r, const Parameters& p) {
  r.run("partitions", "zmeasure-normalization", 1e-10, "absolute", [&] {
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
      double total = 0.0;
      for (const auto& [lambda, w] : zmeasure(n, p)) total += w;
      worst = std::max(worst, std::fabs(total - 1.0));
    }
    return Outcome{worst, "n = 1..12"};
  });

  r.run("partitions", "zmeasure-nonnegative", 0.0, "most negative weight (sign flipped)", [&] {
    double low = 0.0;
    for (int n = 1; n <= 12; ++n) {
      for (const auto& [lambda, w] : zmeasure(n, p)) low = std::min(low, w);
    }
    return Outcome{-low, "n = 1..12"};
  });

  r.run("partitions", "character-orthogonality", 1e-12, "absolute", [] {
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
      const auto parts = enumerate_partitions(n);
      for (const auto& l1 : parts) {
        for (const auto& l2 : parts) {
          double s = 0.0;
          for (const auto& rho : parts) {
            s += static_cast<double>(character(l1, rho) * character(l2, rho)) /
                 static_cast<double>(z_rho(rho));
          }
          worst = std::max(worst, std::fabs(s - (l1 == l2 ? 1.0 : 0.0)));
        }
      }
    }
    return Outcome{worst, "n = 1..8"};
  });

  r.run("partitions", "transpose-symmetry", 1e-12, "relative", [&] {
    const Parameters neg = p.negated();
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        const double a = phi(lambda, neg);
        const double b = phi(lambda.transpose(), p);
        worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(b), 1e-300));
      }
    }
    return Outcome{worst, "phi(lambda; -z, -z') vs phi(lambda'; z, z'), n <= 10"};
  });

  r.run("partitions", "extended-schur-sum", 1e-10, "absolute", [] {
    PointConfiguration omega;
    omega.alphas = {0.4, 0.2};
    omega.betas = {0.3, 0.1};
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
      double s = 0.0;
      for (const auto& lambda : enumerate_partitions(n)) {
        s += static_cast<double>(dimension(lambda)) * extended_schur(lambda, omega);
      }
      worst = std::max(worst, std::fabs(s - 1.0));
    }
    return Outcome{worst, "sum dim(lambda) s~_lambda(omega) = 1, n <= 8"};
  });
}

// ---------------------------------------------------------------- moments

void moment_checks(Runner& r, const Parameters& p) {
  r.run("moments", "signed-moment-identity", 1e-4, "relative", [&] {
    double worst = 0.0;
    for (int k = 1; k <= 6; ++k) {
      worst = std::max(worst, rel(diag_moment(k, p), lifted_moment_combinatorial({k}, p)));
    }
    return Outcome{worst, "k = 1..6"};
  });

  r.run("moments", "signed-moment-closed-forms", 1e-4, "relative", [&] {
    const double t = p.t();
    const double s = (p.z() + p.zprime()).real();
    return Outcome{std::max(rel(diag_moment(1, p), t), rel(diag_moment(2, p), t * s)),
                   "k = 1 gives t, k = 2 gives t(z+z')"};
  });

  r.run("moments", "pair-moment-identity", 1e-3, "relative", [&] {
    const PairMoment pm = pair_moment(1, 2, p);
    const double comb = pochhammer(p.t(), 3) * sigma_moment({0, 1}, p);
    return Outcome{rel(comb - pm.single, pm.pair), "(k, l) = (1, 2)"};
  });

  r.run("moments", "alpha-beta-mass-sum", 1e-10, "absolute", [&] {
    return Outcome{std::fabs(expected_alpha_mass(p) + expected_beta_mass(p) - 1.0), ""};
  });

  r.run("moments", "rho1-first-moment", 1e-4, "relative", [&] {
    return Outcome{rel(rho1_first_moment(p), expected_alpha_mass(p)),
                   "integral of x rho_1 vs closed-form E|alpha|"};
  });
}

// ---------------------------------------------------------------- kernels

void kernel_checks(Runner& r, const Parameters& p) {
  const double xs[] = {0.05, 0.4, 1.0, 2.5, 7.0};

  r.run("kernels", "j-symmetry", 1e-12, "relative to max |K|", [&] {
    const MatrixWhittakerKernel k(p);
    double worst = 0.0;
    double scale = 0.0;
    for (double x : xs) {
      for (double y : xs) {
        const Block2 a = k.evaluate(x, y);
        const Block2 b = k.evaluate(y, x);
        worst = std::max({worst, std::fabs(a[0][1] + b[1][0]), std::fabs(a[0][0] - b[0][0]),
                          std::fabs(a[1][1] - b[1][1])});
        for (const auto& row : a) {
          for (double v : row) scale = std::max(scale, std::fabs(v));
        }
      }
    }
    return Outcome{worst / scale, "K+-(x,y) = -K-+(y,x), diagonal blocks symmetric"};
  });

  r.run("kernels", "parameter-flip", 1e-10, "relative to max |K|", [&] {
    const MatrixWhittakerKernel k(p);
    const MatrixWhittakerKernel kn(p.negated());
    double worst = 0.0;
    double scale = 0.0;
    for (double x : xs) {
      for (double y : xs) {
        const Block2 a = k.evaluate(x, y);
        const Block2 b = kn.evaluate(x, y);
        worst = std::max({worst, std::fabs(b[0][0] - a[1][1]), std::fabs(b[0][1] + a[1][0]),
                          std::fabs(b[1][0] + a[0][1]), std::fabs(b[1][1] - a[0][0])});
        for (const auto& row : a) {
          for (double v : row) scale = std::max(scale, std::fabs(v));
        }
      }
    }
    return Outcome{worst / scale, "K(-z,-z') = [[K--, -K-+], [-K+-, K++]]"};
  });

  r.run("kernels", "diagonal-limit-order", 0.3, "|log10 slope ratio - 2|", [&] {
    const MatrixWhittakerKernel k(p);
    double worst = 0.0;
    for (double u : {0.7, 2.0}) {
      for (Side s : {Side::plus, Side::minus}) {
        const double d0 = k({s, u}, {s, u});
        const double d3 = std::fabs(k({s, u}, {s, u + 1e-3}) - d0);
        const double d5 = std::fabs(k({s, u}, {s, u + 1e-5}) - d0);
        worst = std::max(worst, std::fabs(std::log10(d3 / d5) - 2.0));
      }
    }
    return Outcome{worst, "|K(u,u+eps) - K(u,u)| linear in eps, eps = 1e-3 vs 1e-5"};
  });

  r.run("kernels", "origin-asymptotics", 0.05, "|u (K++ + K--)(u,u)/(2c) - 1| at u = 1e-3", [&] {
    const MatrixWhittakerKernel k(p);
    const double c = TailConstants::from(p).c;
    const Block2 b = k.evaluate(1e-3, 1e-3);
    const double plus = 1e-3 * b[0][0] / c;
    const double minus = 1e-3 * b[1][1] / c;
    return Outcome{std::fabs(0.5 * (plus + minus) - 1.0),
                   "mean of the ++ and -- diagonals; ++ ratio " + std::to_string(plus) +
                       ", -- ratio " + std::to_string(minus)};
  });

  r.run("kernels", "tail-constants", 1e-14, "relative", [&] {
    const TailConstants tc = TailConstants::from(p);
    const double mu2 = p.mu_squared();
    const double f0 = std::fabs(tail_f(0.0, p) - 1.0);
    const double a2 = std::fabs(tc.A_squared() - 4.0 * mu2 * tc.B * tc.B) /
                      std::max(std::fabs(tc.A_squared()), 1e-300);
    return Outcome{std::max({f0, a2, std::fabs(tc.c * tc.B - 0.5)}), "F(0) = 1, A = 2 mu B, cB = 1/2"};
  });

  r.run("kernels", "shift-invariance", 1e-12, "absolute", [&] {
    const TailConstants t0 = TailConstants::from(p);
    double worst = 0.0;
    for (int n : {1, 2}) {
      const Parameters ps = p.shifted(n);
      const TailConstants t1 = TailConstants::from(ps);
      worst = std::max({worst, rel(t1.c, t0.c), rel(t1.B, t0.B)});
      const double gauge = (n % 2) ? -1.0 : 1.0;
      for (double xi : {-1.0, 0.0, 0.6}) {
        for (double eta : {-0.4, 0.3}) {
          const Block2 a = tail_kernel(xi, eta, p);
          const Block2 b = tail_kernel(xi, eta, ps);
          worst = std::max({worst, std::fabs(b[0][0] - a[0][0]), std::fabs(b[1][1] - a[1][1]),
                            std::fabs(b[0][1] - gauge * a[0][1]),
                            std::fabs(b[1][0] - gauge * a[1][0])});
        }
      }
    }
    return Outcome{worst, "N = 1, 2; off-diagonal blocks up to the sign (-1)^N"};
  });

  r.run("kernels", "tail-limit", 1e-3, "sup error at the largest M", [&] {
    const TailConstants tc = TailConstants::from(p);
    std::vector<double> ms;
    std::string note = "M =";
    for (double m : {2.0, 4.0, 6.0, 8.0}) {
      // Real μ: the kernel carries a relative signal x^{2|μ|}; stop before it
      // drops below 1e-8 of the leading terms.
      if (p.mu_kind() == MuKind::real && 2.0 * std::fabs(p.mu_value()) * (m + 1.0) / tc.c > 18.4) {
        continue;
      }
      ms.push_back(m);
      note += " " + std::to_string(static_cast<int>(m));
    }
    if (ms.size() < 2) throw AdmissibilityError("tail-limit: real mu too large for double precision");
    std::vector<std::pair<double, double>> grid;
    for (double xi = -1.0; xi <= 1.0; xi += 0.5) {
      for (double eta = -1.0; eta <= 1.0; eta += 0.5) grid.emplace_back(xi, eta);
    }
    const auto rows = tail_limit_check(ms, grid, p);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (!(rows[i].sup_error < rows[i - 1].sup_error)) {
        return Outcome{1.0, note + "; errors not decreasing"};
      }
    }
    return Outcome{rows.back().sup_error, note};
  });

  r.run("kernels", "tail-resolvent", 1e-5, "absolute", [&] {
    require(std::fabs(p.a()) < 0.5, "tail-resolvent needs |a| < 1/2");
    return Outcome{tail_resolvent_error(p), "K = L/(1+L) on a bounded xi window"};
  });

  r.run("kernels", "spectral-a", 1e-3, "relative", [&] {
    require(std::fabs(p.a()) < 0.5, "A-kernel needs |a| < 1/2");
    double worst = 0.0;
    for (double m : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, spectral_relation_error(p, m, SpectralOperator::a_kernel));
    }
    return Outcome{worst, "A f_{-a,m} = (sigma/pi)|Gamma(1/2-a+im)|^2 f_{a,m}, m in {0.5,1,2}"};
  });

  r.run("kernels", "spectral-kpp", 1e-3, "relative", [&] {
    double worst = 0.0;
    for (double m : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, spectral_relation_error(p, m, SpectralOperator::kpp));
    }
    return Outcome{worst, "m in {0.5, 1, 2}"};
  });

  r.run("kernels", "sturm-liouville", 1e-4, "relative", [&] {
    const double a = p.a();
    double worst = 0.0;
    for (double m : {0.5, 1.0, 2.0}) {
      const WhittakerSolver w(a, -m * m);
      // x² f' = x W' - W exactly; one central difference for the outer d/dx.
      auto flux = [&](double x) {
        const WhittakerValue v = w(x);
        return x * v.derivative - v.value;
      };
      for (double x : {0.3, 1.0, 3.0, 8.0}) {
        const double h = 1e-4 * x;
        const double f = w(x).value / x;
        const double d = -(flux(x + h) - flux(x - h)) / (2.0 * h) + (a - 0.5 * x) * (a - 0.5 * x) * f;
        worst = std::max(worst, rel(d, (a * a + 0.25 + m * m) * f));
      }
    }
    return Outcome{worst, "(-d/dx x^2 d/dx + (a - x/2)^2) f_{a,m} = (a^2+1/4+m^2) f_{a,m}"};
  });
}

// -------------------------------------------------------------- operators

void operator_checks(Runner& r, const Parameters& p) {
  r.run("operators", "resolvent-identity", 1e-6, "max-norm, kernel units", [&] {
    require(std::fabs(p.a()) < 0.5, "resolvent identity needs |a| < 1/2");
    const ResolventReport rep = resolvent_identity_error(p);
    return Outcome{rep.max_error, std::to_string(rep.window_nodes) + " nodes per side"};
  });

  r.run("operators", "block-algebra", 1e-6, "max-norm, weighted", [&] {
    require(std::fabs(p.a()) < 0.5, "A-kernel needs |a| < 1/2");
    const QuadratureGrid grid = softplus_grid(0.3, -12.0, 25.0);
    const Eigen::MatrixXd kpp = k_from_l(discretize_l(p, grid)).block(Side::plus, Side::plus);
    return Outcome{(kpp - kpp_from_a(p, grid)).cwiseAbs().maxCoeff(), "K++ vs AA'(1+AA')^{-1}"};
  });

  r.run("operators", "kpp-spectrum", 0.0, "distance outside [0, 1)", [&] {
    const QuadratureGrid grid = softplus_grid(0.3, -12.0, 25.0);
    const Eigen::MatrixXd kpp = discretize_whittaker(p, grid).block(Side::plus, Side::plus);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(kpp).eigenvalues();
    const double lo = ev.minCoeff();
    const double hi = ev.maxCoeff();
    const double out = std::max({0.0, -lo - 1e-10, hi - 1.0});
    return Outcome{out, "eigenvalues in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"};
  });

  std::vector<FredholmResult> gap;
  r.run("operators", "gap-probability-monotone", 0.0, "largest decrease", [&] {
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
      gap.push_back(gap_probability(p, 0.5 + 19.5 * i / 39.0));
      if (gap.back().value < 0.0 || gap.back().value > 1.0) {
        return Outcome{1.0, "value outside [0, 1]"};
      }
      if (i > 0) worst = std::max(worst, gap[i - 1].value - gap[i].value);
    }
    return Outcome{worst, "40 steps over tau in [0.5, 20]"};
  });

  r.run("operators", "gap-probability-refinement", 1e-5, "relative shift", [&] {
    double worst = 0.0;
    for (const auto& g : gap) worst = std::max(worst, g.shift);
    if (gap.empty()) throw ConvergenceError("no gap probabilities computed");
    return Outcome{worst, "one panel doubling"};
  });

  r.run("operators", "gap-probability-limit", 1e-6, "|det - 1| at tau = 60", [&] {
    return Outcome{std::fabs(gap_probability(p, 60.0).value - 1.0), ""};
  });
}

// ---------------------------------------------------------------- sampler

void sampler_checks(Runner& r, const Parameters& p, std::uint64_t seed) {
  r.run("sampler", "n2-frequency", 3.0, "|z-score|", [&] {
    const int count = 20000;
    const auto draws = sample_zmeasure(2, count, seed, p);
    const double hits = static_cast<double>(
        std::count_if(draws.begin(), draws.end(), [](const Partition& l) { return l.length() == 1; }));
    const double want = ((p.z() + 1.0) * (p.zprime() + 1.0)).real() / (2.0 * (1.0 + p.t()));
    const double se = std::sqrt(want * (1.0 - want) / count);
    return Outcome{std::fabs(hits / count - want) / se, "frequency of (2) vs closed form"};
  });

  r.run("sampler", "determinism", 0.0, "mismatches", [&] {
    const auto a = sample_growth_many(30, 50, seed, p);
    const auto b = sample_growth_many(30, 50, seed, p);
    return Outcome{a == b ? 0.0 : 1.0, "same seed, same samples"};
  });

  r.run("sampler", "mc-alpha-mass", 1.0, "|diff| / max(3 stderr, 0.02)", [&] {
    const McEstimate e = mc_estimate(Statistic::alpha_mass, 1, 200, 20000, seed, p);
    const double oracle = expected_alpha_mass(p);
    return Outcome{std::fabs(e.mean - oracle) / std::max(3.0 * e.standard_error, 0.02),
                   "n = 200, 20000 samples, mean " + std::to_string(e.mean) + " vs " +
                       std::to_string(oracle)};
  });

  r.run("sampler", "mc-ptilde-2", 1.0, "|diff| / max(3 stderr, 0.02)", [&] {
    const McEstimate e = mc_estimate(Statistic::ptilde, 2, 200, 20000, seed, p);
    const double oracle = sigma_moment({1}, p);
    return Outcome{std::fabs(e.mean - oracle) / std::max(3.0 * e.standard_error, 0.02),
                   "n = 200, 20000 samples, mean " + std::to_string(e.mean) + " vs " +
                       std::to_string(oracle)};
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",     "specfun",   "partitions", "moments",
                                                 "kernels", "operators", "sampler"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const Parameters& params,
                             std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw DomainError("unknown suite '" + suite + "'");
  }
  std::vector<Check> out;
  Runner r(out);
  const bool all = suite == "all";
  if (all || suite == "specfun") specfun_checks(r);
  if (all || suite == "partitions") partition_checks(r, params);
  if (all || suite == "moments") moment_checks(r, params);
  if (all || suite == "kernels") kernel_checks(r, params);
  if (all || suite == "operators") operator_checks(r, params);
  if (all || suite == "sampler") sampler_checks(r, params, seed);
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::fail; });
}

nlohmann::json report(const std::vector<Check>& checks, const Parameters& params,
                      const std::string& suite) {
  nlohmann::json doc;
  doc["schema"] = "zmw.verify/1";
  doc["suite"] = suite;
  doc["params"] = {{"z", {params.z().real(), params.z().imag()}},
                   {"zprime", {params.zprime().real(), params.zprime().imag()}},
                   {"t", params.t()},
                   {"a", params.a()},
                   {"sigma", params.sigma()}};
  int passed = 0, failed = 0, skipped = 0;
  nlohmann::json list = nlohmann::json::array();
  for (const Check& c : checks) {
    const char* status = c.status == Status::pass ? "pass" : c.status == Status::fail ? "fail" : "skipped";
    (c.status == Status::pass ? passed : c.status == Status::fail ? failed : skipped)++;
    nlohmann::json j = {{"module", c.module},       {"name", c.name},   {"status", status},
                        {"tolerance", c.tolerance}, {"units", c.units}, {"seconds", c.seconds}};
    if (c.status != Status::skipped) j["value"] = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
    if (!c.note.empty()) j["note"] = c.note;
    list.push_back(std::move(j));
  }
  doc["checks"] = std::move(list);
  doc["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped},
                    {"ok", failed == 0}};
  return doc;
}

}  // namespace zmw::cli

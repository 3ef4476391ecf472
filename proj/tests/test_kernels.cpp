#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "zmw/error.hpp"
#include "zmw/kernels.hpp"
#include "zmw/operators.hpp"
#include "zmw/quadrature.hpp"
#include "zmw/tail.hpp"

using namespace zmw;
using zmw::test::rel_diff;
using zmw::test::standard_sets;

namespace {

constexpr double kPi = std::numbers::pi;
const double kXs[] = {0.03, 0.4, 1.1, 2.5, 7.0};

double block_scale(const Block2& b) {
  return std::max({std::fabs(b[0][0]), std::fabs(b[0][1]), std::fabs(b[1][0]), std::fabs(b[1][1])});
}

}  // namespace

TEST_CASE("J-symmetry of the matrix Whittaker kernel") {
  for (const Parameters& p : standard_sets()) {
    const MatrixWhittakerKernel k(p);
    for (double x : kXs) {
      for (double y : kXs) {
        const Block2 a = k.evaluate(x, y);
        const Block2 b = k.evaluate(y, x);
        const double s = block_scale(a) + 1e-300;
        CHECK(std::fabs(a[0][0] - b[0][0]) <= 1e-12 * s);
        CHECK(std::fabs(a[1][1] - b[1][1]) <= 1e-12 * s);
        CHECK(std::fabs(a[0][1] + b[1][0]) <= 1e-12 * s);
        CHECK(k({Side::plus, x}, {Side::minus, y}) == a[0][1]);
        CHECK(whittaker_kernel(KernelPoint::from_signed(-x), KernelPoint::from_signed(y), p) ==
              doctest::Approx(a[1][0]).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("diagonal blocks are continuous across x = y") {
  for (const Parameters& p : standard_sets()) {
    const MatrixWhittakerKernel k(p);
    for (double x : {0.05, 0.9, 4.0}) {
      const Block2 d = k.evaluate(x, x);
      for (double eps : {1e-3, 1e-5, 1e-7}) {
        const Block2 n = k.evaluate(x, x * (1.0 + eps));
        CHECK(std::fabs(n[0][0] - d[0][0]) <= 5.0 * eps * std::fabs(d[0][0]) + 1e-12);
        CHECK(std::fabs(n[1][1] - d[1][1]) <= 5.0 * eps * std::fabs(d[1][1]) + 1e-12);
      }
      CHECK(d[0][0] > 0.0);
      CHECK(d[1][1] > 0.0);
    }
  }
}

TEST_CASE("(z, z') -> (-z, -z') is conjugation by u -> -u") {
  for (const Parameters& p : standard_sets()) {
    const MatrixWhittakerKernel k(p);
    const MatrixWhittakerKernel kn(p.negated());
    for (double x : kXs) {
      for (double y : kXs) {
        const Block2 a = k.evaluate(x, y);
        const Block2 b = kn.evaluate(x, y);
        const double s = block_scale(a);
        CHECK(std::fabs(b[0][0] - a[1][1]) <= 1e-11 * s);
        CHECK(std::fabs(b[0][1] + a[1][0]) <= 1e-11 * s);
        CHECK(std::fabs(b[1][0] + a[0][1]) <= 1e-11 * s);
        CHECK(std::fabs(b[1][1] - a[0][0]) <= 1e-11 * s);
      }
    }
  }
}

TEST_CASE("correlation functions are determinants") {
  const Parameters p = Parameters::complementary(0.3, 0.6);
  const MatrixWhittakerKernel k(p);
  const KernelPoint u{Side::plus, 0.7};
  const KernelPoint v{Side::minus, 1.9};
  const KernelPoint w{Side::plus, 3.3};
  const KernelPoint one[] = {u};
  CHECK(correlation(one, p) == doctest::Approx(k(u, u)).epsilon(1e-14));
  const KernelPoint two[] = {u, v};
  CHECK(correlation(two, p) == doctest::Approx(k(u, u) * k(v, v) - k(u, v) * k(v, u)).epsilon(1e-12));
  const KernelPoint three[] = {u, v, w};
  CHECK(correlation(three, p) >= 0.0);
}

TEST_CASE("near the origin u K(u,u) approaches c") {
  for (const Parameters& p : standard_sets()) {
    CAPTURE(p.describe());
    const MatrixWhittakerKernel k(p);
    const double c = TailConstants::from(p).c;
    const Block2 b = k.evaluate(1e-3, 1e-3);
    CHECK(std::fabs(1e-3 * 0.5 * (b[0][0] + b[1][1]) / c - 1.0) <= 0.05);
    // And the approach improves as u decreases.
    const Block2 b2 = k.evaluate(1e-6, 1e-6);
    CHECK(std::fabs(1e-6 * 0.5 * (b2[0][0] + b2[1][1]) / c - 1.0) <
          std::fabs(1e-3 * 0.5 * (b[0][0] + b[1][1]) / c - 1.0) + 1e-12);
  }
}

TEST_CASE("L-kernel structure") {
  const Parameters p = Parameters::principal({0.2, 0.5});
  for (double x : kXs) {
    for (double y : kXs) {
      const Block2 l = l_kernel_blocks(x, y, p);
      CHECK(l[0][0] == 0.0);
      CHECK(l[1][1] == 0.0);
      CHECK(l[0][1] == a_kernel(x, y, p));
      CHECK(l[1][0] == -a_kernel(y, x, p));
      const double want = p.sigma() / kPi * std::pow(x / y, p.a()) * std::exp(-0.5 * (x + y)) / (x + y);
      CHECK(rel_diff(a_kernel(x, y, p), want) < 1e-14);
    }
  }
  CHECK_THROWS_AS(a_kernel(1.0, 1.0, Parameters::principal({0.7, 0.5})), AdmissibilityError);
}

TEST_CASE("tail constants and kernels") {
  for (const Parameters& p : standard_sets()) {
    const TailConstants tc = TailConstants::from(p);
    CHECK(tail_f(0.0, p) == 1.0);
    CHECK(tc.c * tc.B == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tc.A_squared() == doctest::Approx(4.0 * p.mu_squared() * tc.B * tc.B).epsilon(1e-14));
    const double mu = std::sqrt(std::fabs(p.mu_squared()));
    const double s2 = mu == 0.0 ? 2.0 * kPi
                                : (p.mu_kind() == MuKind::real ? std::sin(2.0 * kPi * mu) : std::sinh(2.0 * kPi * mu)) / mu;
    CHECK(rel_diff(tc.c, 2.0 * p.sigma_squared() / (kPi * s2)) < 1e-13);
    // F is even, 𝒦 is translation invariant with the stated orientation.
    for (double z : {0.3, 1.7}) CHECK(tail_f(z, p) == doctest::Approx(tail_f(-z, p)).epsilon(1e-14));
    const Block2 k = tail_kernel(0.9, 0.2, p);
    CHECK(k[0][0] == doctest::Approx(tail_f(0.7, p)));
    CHECK(k[0][1] == doctest::Approx(tail_g(-0.7, p)));
    CHECK(k[1][0] == doctest::Approx(-tail_g(0.7, p)));
    CHECK(k[1][1] == doctest::Approx(tail_f(0.7, p)));
  }
}

TEST_CASE("tail kernel under integer shifts") {
  for (const Parameters& p : standard_sets()) {
    for (int n : {1, 2, 3}) {
      const Parameters ps = p.shifted(n);
      const double gauge = n % 2 ? -1.0 : 1.0;
      for (double xi : {-0.8, 0.4}) {
        for (double eta : {-0.1, 1.2}) {
          const Block2 a = tail_kernel(xi, eta, p);
          const Block2 b = tail_kernel(xi, eta, ps);
          CHECK(b[0][0] == doctest::Approx(a[0][0]).epsilon(1e-12));
          CHECK(b[1][1] == doctest::Approx(a[1][1]).epsilon(1e-12));
          CHECK(b[0][1] == doctest::Approx(gauge * a[0][1]).epsilon(1e-12));
          CHECK(b[1][0] == doctest::Approx(gauge * a[1][0]).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("rescaled kernel converges to the tail kernel") {
  std::vector<std::pair<double, double>> grid;
  for (double xi = -1.0; xi <= 1.0; xi += 0.5) {
    for (double eta = -1.0; eta <= 1.0; eta += 0.5) grid.emplace_back(xi, eta);
  }
  const double ms[] = {2.0, 4.0, 6.0, 8.0};
  for (const Parameters& p : {Parameters::principal({0.3, 2.0}), Parameters::principal({-0.2, 1.0})}) {
    CAPTURE(p.describe());
    const auto rows = tail_limit_check(ms, grid, p);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].sup_error < rows[i - 1].sup_error);
    CHECK(rows.back().sup_error <= 1e-3);
  }
}

TEST_CASE("tail kernel is the resolvent of the tail L-kernel") {
  for (const Parameters& p : {Parameters::complementary(0.3, 0.6), Parameters::principal({0.2, 0.5}),
                              Parameters::principal({-0.3, 1.4})}) {
    CAPTURE(p.describe());
    CHECK(tail_resolvent_error(p) <= 1e-5);
    const Block2 l = tail_l_kernel(0.3, -0.2, p);
    CHECK(l[0][0] == 0.0);
    CHECK(l[1][0] == doctest::Approx(-tail_l_kernel(-0.2, 0.3, p)[0][1]).epsilon(1e-14));
  }
}

TEST_CASE("sine-kernel limit of F improves with |mu|") {
  auto sup_error = [](double m) {
    const Parameters p = Parameters::from_a_mu(0.1, MuKind::imaginary, m);
    double worst = 0.0;
    for (double z = -3.0; z <= 3.0; z += 0.01) {
      const double sinc = std::fabs(z) < 1e-12 ? 1.0 : std::sin(kPi * z) / (kPi * z);
      worst = std::max(worst, std::fabs(tail_f(z, p) - sinc));
    }
    return worst;
  };
  double prev = 1.0;
  for (double m : {2.0, 5.0, 10.0, 20.0}) {
    const double e = sup_error(m);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev <= 1e-3);
}

TEST_CASE("Laguerre kernel: reproducing property and trace") {
  // x = s² makes e^{-x} x^α·poly smooth in s for the 2α integers used here;
  // composite Gauss–Legendre in s ∈ [0, 12].
  QuadratureRule rule;
  for (int k = 0; k < 24; ++k) {
    const QuadratureRule panel = gauss_legendre(20, 0.5 * k, 0.5 * (k + 1));
    for (std::size_t i = 0; i < panel.size(); ++i) {
      rule.nodes.push_back(panel.nodes[i] * panel.nodes[i]);
      rule.weights.push_back(2.0 * panel.nodes[i] * panel.weights[i]);
    }
  }
  for (auto [n, alpha] : {std::pair{1, 0.0}, std::pair{2, 0.5}, std::pair{3, 1.0}, std::pair{5, 2.0}}) {
    double trace = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      trace += rule.weights[i] * laguerre_kernel(n, alpha, rule.nodes[i], rule.nodes[i]);
    }
    CHECK(trace == doctest::Approx(n).epsilon(1e-10));
    for (auto [x, y] : {std::pair{0.5, 1.5}, std::pair{3.0, 0.2}}) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * laguerre_kernel(n, alpha, x, rule.nodes[i]) *
               laguerre_kernel(n, alpha, rule.nodes[i], y);
      }
      CHECK(acc == doctest::Approx(laguerre_kernel(n, alpha, x, y)).epsilon(1e-10));
    }
  }
}

TEST_CASE("Laguerre degeneration of the ++ block") {
  for (auto [n, alpha] : {std::pair{1, 0.0}, std::pair{2, 0.5}, std::pair{3, 1.0}}) {
    CAPTURE(n);
    const MatrixWhittakerKernel k(Parameters::formal(n + alpha, n));
    double worst = 0.0;
    double scale = 0.0;
    for (double x : {0.1, 0.5, 1.0, 2.5, 6.0, 12.0}) {
      for (double y : {0.2, 0.5, 1.0, 3.0, 8.0}) {
        const double l = laguerre_kernel(n, alpha, x, y);
        worst = std::max(worst, std::fabs(k.evaluate(x, y)[0][0] - l));
        scale = std::max(scale, std::fabs(l));
      }
    }
    CHECK(worst <= 1e-6 * scale);
  }
}

TEST_CASE("spectral relations") {
  for (const Parameters& p : {Parameters::principal({0.0, 0.5}), Parameters::principal({0.2, 0.5}),
                              Parameters::complementary(0.3, 0.6)}) {
    CAPTURE(p.describe());
    for (double m : {0.5, 1.0, 2.0}) {
      CHECK(spectral_relation_error(p, m, SpectralOperator::a_kernel) <= 1e-3);
      CHECK(spectral_relation_error(p, m, SpectralOperator::kpp) <= 1e-3);
      const double lam = kpp_eigenvalue(m, p);
      CHECK(lam > 0.0);
      CHECK(lam < 1.0);
    }
  }
  // K++ = AA'(1+AA')^{-1} makes the K++ eigenvalue λ/(1+λ) with λ = a_m a'_m.
  const Parameters p = Parameters::principal({0.0, 0.5});
  for (double m : {0.5, 1.0}) {
    const double lam = a_eigenvalue(m, p) * a_eigenvalue(m, p);
    CHECK(kpp_eigenvalue(m, p) == doctest::Approx(lam / (1.0 + lam)).epsilon(1e-12));
  }
}

TEST_CASE("Sturm-Liouville operator has f_{a,m} as eigenfunctions") {
  // D = -(d/dx) x² (d/dx) + (a - x/2)², eigenvalue a² + ¼ + m².
  for (double a : {-0.3, 0.0, 0.2}) {
    for (double m : {0.5, 1.0, 2.0}) {
      const WhittakerSolver w(a, -m * m);
      auto flux = [&](double x) {
        const WhittakerValue v = w(x);
        return x * v.derivative - v.value;  // x² f' with f = W/x
      };
      for (double x : {0.3, 1.0, 4.0}) {
        const double h = 1e-3 * x;
        const double dflux = (8.0 * (flux(x + h) - flux(x - h)) - (flux(x + 2 * h) - flux(x - 2 * h))) / (12.0 * h);
        const double f = w(x).value / x;
        const double lhs = -dflux + (a - 0.5 * x) * (a - 0.5 * x) * f;
        const double rhs = (a * a + 0.25 + m * m) * f;
        CHECK(std::fabs(lhs - rhs) <= 1e-7 * (std::fabs(dflux) + std::fabs(rhs)));
      }
    }
  }
}

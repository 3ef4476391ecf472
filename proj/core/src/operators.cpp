#include "zmw/operators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zmw/error.hpp"
#include "zmw/parallel.hpp"

namespace zmw {
namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd sqrt_weights(const QuadratureGrid& grid) {
  Eigen::VectorXd s(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) s(i) = std::sqrt(grid.weight(i));
  return s;
}

// Nodes x = τ e^s on [τ, τ + span] with composite Gauss–Legendre in s.
QuadratureRule log_panel_rule(double tau, double span, int panels, int order) {
  const double s_max = std::log1p(span / tau);
  const QuadratureRule base = gauss_legendre(order);
  QuadratureRule rule;
  const double width = s_max / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = p * width;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double s = lo + 0.5 * width * (base.nodes[i] + 1.0);
      const double x = tau * std::exp(s);
      rule.nodes.push_back(x);
      rule.weights.push_back(0.5 * width * base.weights[i] * x);
    }
  }
  return rule;
}

double det_one_minus(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  return (id - m).partialPivLu().determinant();
}

}  // namespace

QuadratureGrid QuadratureGrid::both_sides(const QuadratureRule& rule, std::string scheme) {
  QuadratureGrid g;
  g.plus_nodes = rule.nodes;
  g.plus_weights = rule.weights;
  g.minus_nodes = rule.nodes;
  g.minus_weights = rule.weights;
  g.scheme = std::move(scheme);
  g.validate();
  return g;
}

QuadratureGrid QuadratureGrid::plus_only(const QuadratureRule& rule, std::string scheme) {
  QuadratureGrid g;
  g.plus_nodes = rule.nodes;
  g.plus_weights = rule.weights;
  g.scheme = std::move(scheme);
  g.validate();
  return g;
}

KernelPoint QuadratureGrid::point(std::size_t index) const {
  if (index < plus_size()) return KernelPoint{Side::plus, plus_nodes[index]};
  return KernelPoint{Side::minus, minus_nodes[index - plus_size()]};
}

double QuadratureGrid::weight(std::size_t index) const {
  return index < plus_size() ? plus_weights[index] : minus_weights[index - plus_size()];
}

void QuadratureGrid::validate() const {
  auto check = [](const std::vector<double>& nodes, const std::vector<double>& weights) {
    if (nodes.size() != weights.size()) throw DomainError("grid: node/weight size mismatch");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!(nodes[i] > 0.0) || !(weights[i] > 0.0)) {
        throw DomainError("grid: nodes and weights must be positive");
      }
      if (i > 0 && !(nodes[i] > nodes[i - 1])) {
        throw DomainError("grid: nodes must be strictly increasing");
      }
    }
  };
  check(plus_nodes, plus_weights);
  check(minus_nodes, minus_weights);
}

QuadratureGrid softplus_grid(double h, double s_min, double s_max) {
  return QuadratureGrid::both_sides(softplus_trapezoid(h, s_min, s_max), "softplus-trapezoid");
}

BlockKernelMatrix::BlockKernelMatrix(QuadratureGrid grid, Eigen::MatrixXd weighted)
    : grid_(std::move(grid)), m_(std::move(weighted)), sqrt_w_(sqrt_weights(grid_)) {
  const auto n = static_cast<Eigen::Index>(grid_.size());
  if (m_.rows() != n || m_.cols() != n) {
    throw DomainError("BlockKernelMatrix: matrix size does not match the grid");
  }
}

Eigen::MatrixXd BlockKernelMatrix::block(Side row, Side col) const {
  const auto np = static_cast<Eigen::Index>(grid_.plus_size());
  const auto nm = static_cast<Eigen::Index>(grid_.minus_size());
  const Eigen::Index r0 = row == Side::plus ? 0 : np;
  const Eigen::Index c0 = col == Side::plus ? 0 : np;
  const Eigen::Index rn = row == Side::plus ? np : nm;
  const Eigen::Index cn = col == Side::plus ? np : nm;
  return m_.block(r0, c0, rn, cn);
}

double BlockKernelMatrix::kernel_value(std::size_t i, std::size_t j) const {
  return m_(i, j) / (sqrt_w_(i) * sqrt_w_(j));
}

BlockKernelMatrix discretize(const KernelFunction& kernel, const QuadratureGrid& grid) {
  const std::size_t n = grid.size();
  const Eigen::VectorXd sw = sqrt_weights(grid);
  Eigen::MatrixXd m(n, n);
  parallel_for(n, [&](std::size_t i) {
    const KernelPoint u = grid.point(i);
    for (std::size_t j = 0; j < n; ++j) {
      const KernelPoint v = grid.point(j);
      double value = 0.0;
      try {
        value = kernel(u, v);
      } catch (const std::exception& e) {
        std::ostringstream os;
        os << e.what() << " [at u=" << u.signed_value() << ", v=" << v.signed_value() << "]";
        throw ConvergenceError(os.str());
      }
      m(i, j) = sw(i) * value * sw(j);
    }
  });
  return BlockKernelMatrix(grid, std::move(m));
}

BlockKernelMatrix discretize_whittaker(const Parameters& params, const QuadratureGrid& grid) {
  const MatrixWhittakerKernel kernel(params);
  const std::vector<WhittakerJet> plus = kernel.jets(grid.plus_nodes);
  const std::vector<WhittakerJet> minus =
      grid.minus_nodes == grid.plus_nodes ? plus : kernel.jets(grid.minus_nodes);
  const std::size_t np = grid.plus_size();
  const std::size_t n = grid.size();
  const Eigen::VectorXd sw = sqrt_weights(grid);
  auto jet_of = [&](std::size_t i) -> const WhittakerJet& {
    return i < np ? plus[i] : minus[i - np];
  };
  Eigen::MatrixXd m(n, n);
  parallel_for(n, [&](std::size_t i) {
    const Side si = i < np ? Side::plus : Side::minus;
    for (std::size_t j = 0; j < n; ++j) {
      const Side sj = j < np ? Side::plus : Side::minus;
      m(i, j) = sw(i) * kernel.value(si, jet_of(i), sj, jet_of(j)) * sw(j);
    }
  });
  return BlockKernelMatrix(grid, std::move(m));
}

BlockKernelMatrix discretize_l(const Parameters& params, const QuadratureGrid& grid) {
  const std::size_t np = grid.plus_size();
  const std::size_t n = grid.size();
  const Eigen::VectorXd sw = sqrt_weights(grid);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  parallel_for(np, [&](std::size_t i) {
    for (std::size_t j = np; j < n; ++j) {
      const double a = a_kernel(grid.plus_nodes[i], grid.minus_nodes[j - np], params);
      m(i, j) = sw(i) * a * sw(j);
    }
  });
  for (std::size_t i = np; i < n; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      m(i, j) = -sw(i) * a_kernel(grid.plus_nodes[j], grid.minus_nodes[i - np], params) * sw(j);
    }
  }
  return BlockKernelMatrix(grid, std::move(m));
}

BlockKernelMatrix k_from_l(const BlockKernelMatrix& l) {
  const Eigen::MatrixXd& m = l.weighted();
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(m.rows(), m.cols()) + m;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
  Eigen::MatrixXd k = lu.solve(m);
  if (!k.allFinite()) throw ConvergenceError("k_from_l: singular 1 + L on this grid");
  return BlockKernelMatrix(l.grid(), std::move(k));
}

Eigen::MatrixXd kpp_from_a(const Parameters& params, const QuadratureGrid& grid) {
  const std::size_t np = grid.plus_size();
  if (grid.minus_nodes != grid.plus_nodes) {
    throw DomainError("kpp_from_a: needs identical node sets on both sides");
  }
  Eigen::MatrixXd a(np, np);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      a(i, j) = std::sqrt(grid.plus_weights[i]) *
                a_kernel(grid.plus_nodes[i], grid.minus_nodes[j], params) *
                std::sqrt(grid.minus_weights[j]);
    }
  }
  const Eigen::MatrixXd aat = a * a.transpose();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(np, np);
  // AA'(1 + AA')^{-1} = (1 + AA')^{-1} AA' since the factors commute.
  return (id + aat).partialPivLu().solve(aat);
}

double correlation(std::span<const KernelPoint> points, const Parameters& params) {
  const MatrixWhittakerKernel kernel(params);
  const auto n = static_cast<Eigen::Index>(points.size());
  std::vector<WhittakerJet> jets;
  jets.reserve(points.size());
  for (const KernelPoint& p : points) jets.push_back(kernel.jet(p.x));
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = kernel.value(points[i].side, jets[i], points[j].side, jets[j]);
    }
  }
  return n == 0 ? 1.0 : m.partialPivLu().determinant();
}

FredholmResult fredholm_det(const std::function<double(double, double)>& kernel, double tau,
                            const FredholmOptions& opts) {
  if (!(tau > 0.0)) throw DomainError("fredholm_det: tau must be positive");
  auto evaluate = [&](int panels) {
    const QuadratureRule rule = log_panel_rule(tau, opts.span, panels, opts.order);
    const auto n = static_cast<Eigen::Index>(rule.size());
    Eigen::MatrixXd m(n, n);
    parallel_for(rule.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < rule.size(); ++j) {
        m(i, j) = std::sqrt(rule.weights[i] * rule.weights[j]) *
                  kernel(rule.nodes[i], rule.nodes[j]);
      }
    });
    return det_one_minus(m);
  };
  FredholmResult r;
  r.value = evaluate(opts.panels);
  r.refined = evaluate(2 * opts.panels);
  r.nodes = 2 * opts.panels * opts.order;
  r.shift = std::fabs(r.refined - r.value) / std::max(std::fabs(r.refined), 1e-3);
  if (r.shift > opts.tolerance) {
    std::ostringstream os;
    os << "fredholm_det: refinement shift " << r.shift << " exceeds " << opts.tolerance
       << " at tau=" << tau;
    throw ConvergenceError(os.str());
  }
  return r;
}

FredholmResult gap_probability(const Parameters& params, double tau, const FredholmOptions& opts) {
  if (!(tau > 0.0)) throw DomainError("gap_probability: tau must be positive");
  const MatrixWhittakerKernel kernel(params);
  auto evaluate = [&](int panels) {
    const QuadratureRule rule = log_panel_rule(tau, opts.span, panels, opts.order);
    const std::vector<WhittakerJet> jets = kernel.jets(rule.nodes);
    const auto n = static_cast<Eigen::Index>(rule.size());
    Eigen::MatrixXd m(n, n);
    parallel_for(rule.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < rule.size(); ++j) {
        m(i, j) = std::sqrt(rule.weights[i] * rule.weights[j]) *
                  kernel.value(Side::plus, jets[i], Side::plus, jets[j]);
      }
    });
    return det_one_minus(m);
  };
  FredholmResult r;
  r.value = evaluate(opts.panels);
  r.refined = evaluate(2 * opts.panels);
  r.nodes = 2 * opts.panels * opts.order;
  r.shift = std::fabs(r.refined - r.value) / std::max(std::fabs(r.refined), 1e-3);
  if (r.shift > opts.tolerance) {
    std::ostringstream os;
    os << "gap_probability: refinement shift " << r.shift << " exceeds " << opts.tolerance
       << " at tau=" << tau << " for " << params.describe();
    throw ConvergenceError(os.str());
  }
  return r;
}

double diag_moment(int k, const Parameters& params, const DiagMomentOptions& opts) {
  if (k < 1) throw DomainError("diag_moment: k must be positive");
  const MatrixWhittakerKernel kernel(params);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  auto integrate = [&](double h) {
    const QuadratureRule rule = softplus_trapezoid(h, opts.s_min, opts.s_max);
    const std::vector<WhittakerJet> jets = kernel.jets(rule.nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double kpp = kernel.value(Side::plus, jets[i], Side::plus, jets[i]);
      const double kmm = kernel.value(Side::minus, jets[i], Side::minus, jets[i]);
      acc += rule.weights[i] * std::pow(rule.nodes[i], k) * (kpp - sign * kmm);
    }
    return acc;
  };
  const double coarse = integrate(opts.h);
  const double fine = integrate(0.5 * opts.h);
  if (std::fabs(fine - coarse) > opts.tolerance * std::max(std::fabs(fine), 1e-300)) {
    std::ostringstream os;
    os << "diag_moment: k=" << k << " refinement shift " << std::fabs(fine - coarse)
       << " for " << params.describe();
    throw ConvergenceError(os.str());
  }
  return fine;
}

PairMoment pair_moment(int k, int l, const Parameters& params, const DiagMomentOptions& opts) {
  if (k < 1 || l < 1) throw DomainError("pair_moment: k, l must be positive");
  const MatrixWhittakerKernel kernel(params);
  // f_k on the − side: sgn(-x)(-x)^k = (-1)^{k+1} x^k.
  auto side_sign = [](int power, Side side) {
    return side == Side::plus || power % 2 == 1 ? 1.0 : -1.0;
  };
  const Side sides[2] = {Side::plus, Side::minus};
  auto integrate = [&](double h) {
    const QuadratureRule rule = softplus_trapezoid(h, opts.s_min, opts.s_max);
    const std::vector<WhittakerJet> jets = kernel.jets(rule.nodes);
    const std::size_t n = rule.size();
    std::vector<double> diag(2 * n);
    for (int s = 0; s < 2; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        diag[s * n + i] = kernel.value(sides[s], jets[i], sides[s], jets[i]);
      }
    }
    PairMoment r;
    for (int su = 0; su < 2; ++su) {
      const double fk = side_sign(k, sides[su]);
      const double fkl = side_sign(k, sides[su]) * side_sign(l, sides[su]);
      for (std::size_t i = 0; i < n; ++i) {
        const double wu = rule.weights[i] * std::pow(rule.nodes[i], k);
        r.single += fkl * wu * std::pow(rule.nodes[i], l) * diag[su * n + i];
        for (int sv = 0; sv < 2; ++sv) {
          const double fl = side_sign(l, sides[sv]);
          double acc = 0.0;
          for (std::size_t j = 0; j < n; ++j) {
            if (su == sv && i == j) continue;
            const double kuv = kernel.value(sides[su], jets[i], sides[sv], jets[j]);
            const double kvu = kernel.value(sides[sv], jets[j], sides[su], jets[i]);
            const double det = diag[su * n + i] * diag[sv * n + j] - kuv * kvu;
            acc += rule.weights[j] * std::pow(rule.nodes[j], l) * det;
          }
          r.pair += fk * fl * wu * acc;
        }
      }
    }
    return r;
  };
  const PairMoment coarse = integrate(opts.h);
  const PairMoment fine = integrate(0.5 * opts.h);
  const double shift = std::max(std::fabs(fine.single - coarse.single),
                                std::fabs(fine.pair - coarse.pair));
  const double scale = std::max({std::fabs(fine.single), std::fabs(fine.pair), 1e-300});
  if (shift > std::max(opts.tolerance, 1e-6) * scale) {
    std::ostringstream os;
    os << "pair_moment: k=" << k << ", l=" << l << " refinement shift " << shift << " for "
       << params.describe();
    throw ConvergenceError(os.str());
  }
  return fine;
}

ResolventReport resolvent_identity_error(const Parameters& params, const ResolventOptions& opts) {
  const double s_min = opts.window_s_min - opts.buffer_nodes * opts.h;
  const double s_max = opts.window_s_min + (opts.window_nodes - 1) * opts.h;
  const QuadratureGrid grid = softplus_grid(opts.h, s_min, s_max + 0.5 * opts.h);
  const BlockKernelMatrix direct = discretize_whittaker(params, grid);
  const BlockKernelMatrix resolved = k_from_l(discretize_l(params, grid));
  const std::size_t np = grid.plus_size();
  const std::size_t first = np - static_cast<std::size_t>(opts.window_nodes);
  ResolventReport r;
  r.window_nodes = opts.window_nodes;
  r.grid_nodes = static_cast<int>(np);
  for (int si = 0; si < 2; ++si) {
    for (int sj = 0; sj < 2; ++sj) {
      for (std::size_t i = first; i < np; ++i) {
        for (std::size_t j = first; j < np; ++j) {
          const std::size_t gi = i + si * np;
          const std::size_t gj = j + sj * np;
          r.max_error = std::max(r.max_error, std::fabs(direct.kernel_value(gi, gj) -
                                                        resolved.kernel_value(gi, gj)));
        }
      }
    }
  }
  return r;
}

Block2 rescaled_kernel(double xi, double eta, const Parameters& params) {
  const double c = TailConstants::from(params).c;
  const double x = std::exp(-xi / c);
  const double y = std::exp(-eta / c);
  if (x < 1e-290 || y < 1e-290) {
    std::ostringstream os;
    os << "rescaled_kernel: e^{-xi/c} underflows at xi=" << xi << ", eta=" << eta;
    throw GuardError(os.str());
  }
  Block2 k = MatrixWhittakerKernel(params).evaluate(x, y);
  const double jac = std::sqrt(x * y) / c;
  for (auto& row : k) {
    for (double& v : row) v *= jac;
  }
  return k;
}

std::vector<TailLimitRow> tail_limit_check(std::span<const double> ms,
                                           std::span<const std::pair<double, double>> grid,
                                           const Parameters& params) {
  const double c = TailConstants::from(params).c;
  const MatrixWhittakerKernel kernel(params);
  std::vector<TailLimitRow> rows;
  for (double m : ms) {
    TailLimitRow row{m, 0.0};
    for (const auto& [xi, eta] : grid) {
      const double x = std::exp(-(xi + m) / c);
      const double y = std::exp(-(eta + m) / c);
      if (x < 1e-290 || y < 1e-290) {
        std::ostringstream os;
        os << "tail_limit_check: e^{-(xi+M)/c} underflows at M=" << m << ", xi=" << xi;
        throw GuardError(os.str());
      }
      const Block2 k = kernel.evaluate(x, y);
      const Block2 limit = tail_kernel(xi, eta, params);
      const double jac = std::sqrt(x * y) / c;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          row.sup_error = std::max(row.sup_error, std::fabs(k[i][j] * jac - limit[i][j]));
        }
      }
    }
    rows.push_back(row);
  }
  return rows;
}

double tail_resolvent_error(const Parameters& params, const TailResolventOptions& opts) {
  const double b = TailConstants::from(params).B;
  const double h = opts.step / b;
  const int half = static_cast<int>(std::round(opts.half_width / opts.step));
  const int n = 2 * half + 1;
  std::vector<double> xi(n);
  for (int i = 0; i < n; ++i) xi[i] = (i - half) * h;

  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Block2 v = tail_l_kernel(xi[i], xi[j], params);
      l(i, n + j) = h * v[0][1];
      l(n + i, j) = h * v[1][0];
    }
  }
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  const Eigen::MatrixXd k = (id + l).partialPivLu().solve(l) / h;

  double err = 0.0;
  const double probe = opts.probe_half_width / b;
  for (int i = 0; i < n; ++i) {
    if (std::fabs(xi[i]) > probe + 1e-12) continue;
    for (int j = 0; j < n; ++j) {
      if (std::fabs(xi[j]) > probe + 1e-12) continue;
      const Block2 exact = tail_kernel(xi[i], xi[j], params);
      for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
          err = std::max(err, std::fabs(k(a * n + i, c * n + j) - exact[a][c]));
        }
      }
    }
  }
  return err;
}

double spectral_relation_error(const Parameters& params, double m, SpectralOperator op,
                               const SpectralOptions& opts) {
  const QuadratureRule rule = softplus_trapezoid(opts.h, opts.s_min, opts.s_max);
  // A intertwines D_{-a} with D_a, so it carries f_{-a,m} onto a multiple of f_{a,m};
  // K_{++} commutes with D_a and keeps f_{a,m}.
  const WhittakerSolver eigen(params.a(), -m * m);
  const WhittakerSolver source(op == SpectralOperator::a_kernel ? -params.a() : params.a(),
                               -m * m);
  std::vector<double> f(rule.size());
  {
    const std::vector<WhittakerValue> w = source.evaluate(rule.nodes);
    for (std::size_t j = 0; j < rule.size(); ++j) f[j] = w[j].value / rule.nodes[j];
  }
  std::vector<double> fp(opts.probes.size());
  {
    const std::vector<WhittakerValue> w = eigen.evaluate(opts.probes);
    for (std::size_t i = 0; i < fp.size(); ++i) fp[i] = w[i].value / opts.probes[i];
  }
  double lambda = 0.0;
  std::vector<double> tf(opts.probes.size(), 0.0);
  if (op == SpectralOperator::a_kernel) {
    lambda = a_eigenvalue(m, params);
    for (std::size_t i = 0; i < tf.size(); ++i) {
      for (std::size_t j = 0; j < rule.size(); ++j) {
        tf[i] += a_kernel(opts.probes[i], rule.nodes[j], params) * f[j] * rule.weights[j];
      }
    }
    // Below the grid the integrand is ~ y^{-a-1/2} and decays too slowly in s
    // for |a| near 1/2.  Use W_{-a,im}(y) ~ 2 Re[C y^{1/2-im}] and sum the
    // nodes s_min - kh, k >= 1, in closed form.
    if (!(m > 0.0)) throw DomainError("spectral_relation_error: A-kernel check needs m > 0");
    const double a = params.a();
    const cplx c = std::exp(log_gamma(cplx(0.0, 2.0 * m)) - log_gamma(cplx(0.5 + a, m)));
    const cplx beta(0.5 - a, -m);
    const cplx r = std::exp(-beta * opts.h);
    const cplx tail = 2.0 * c * opts.h * std::exp(beta * opts.s_min) * r / (1.0 - r);
    for (std::size_t i = 0; i < tf.size(); ++i) {
      const double x = opts.probes[i];
      tf[i] += params.sigma() / kPi * std::pow(x, a - 1.0) * std::exp(-0.5 * x) * tail.real();
    }
  } else {
    lambda = kpp_eigenvalue(m, params);
    const MatrixWhittakerKernel kernel(params);
    const std::vector<WhittakerJet> nodes = kernel.jets(rule.nodes);
    const std::vector<WhittakerJet> probes = kernel.jets(opts.probes);
    for (std::size_t i = 0; i < tf.size(); ++i) {
      for (std::size_t j = 0; j < rule.size(); ++j) {
        tf[i] += kernel.value(Side::plus, probes[i], Side::plus, nodes[j]) * f[j] *
                 rule.weights[j];
      }
    }
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < tf.size(); ++i) {
    num = std::max(num, std::fabs(tf[i] - lambda * fp[i]));
    den = std::max(den, std::fabs(lambda * fp[i]));
  }
  return num / den;
}

}  // namespace zmw

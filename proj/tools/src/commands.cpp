#include "commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "output.hpp"
#include "params.hpp"
#include "suite.hpp"
#include "zmw/error.hpp"
#include "zmw/kernels.hpp"
#include "zmw/moments.hpp"
#include "zmw/operators.hpp"
#include "zmw/parallel.hpp"
#include "zmw/partitions.hpp"
#include "zmw/sampler.hpp"
#include "zmw/specfun.hpp"
#include "zmw/tail.hpp"

namespace zmw::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kVerifySeed = 20240601;

// Parsed flags for every subcommand; only the active one is consulted.
struct Options {
  ParamInput params;
  int threads = 0;
  std::string out_path;

  std::string fn;
  std::vector<double> x_values;
  std::vector<double> y_values;
  double kappa = 0.0;
  std::string mu = "0";
  int n = 0;
  double alpha = 0.0;
  double nu = 0.0;
  std::string w = "1";

  std::string block = "all";
  std::string kernel = "whittaker";
  std::string tail_kernel_name = "K";

  double tau_min = 0.5;
  double tau_max = 20.0;
  int steps = 40;

  int kmax = 6;
  std::string ls = "1";

  int count = 1;
  std::optional<std::uint64_t> seed;
  std::string method = "auto";
  std::string statistic = "alpha-mass";
  int k = 2;
  std::string scaling = "p";

  std::vector<double> ms = {2.0, 4.0, 6.0, 8.0};
  bool constants = false;

  std::string suite = "all";
  std::uint64_t verify_seed = kVerifySeed;
};

struct Context {
  const Options& o;
  std::ostream& out;
  std::optional<Parameters> params;

  const Parameters& p() {
    if (!params) params = resolve_parameters(o.params);
    return *params;
  }
};

void write_json(std::ostream& out, const json& doc) {
  check_finite(doc);
  out << doc.dump(2) << '\n';
}

// ------------------------------------------------------------------ specfun

void cmd_specfun_eval(Context& ctx) {
  const Options& o = ctx.o;
  if (o.fn == "lgamma") {
    const cplx w = parse_complex(o.w);
    const cplx v = log_gamma(w);
    CsvTable t("zmw.specfun.lgamma/1", {"w_re", "w_im", "value_re", "value_im"});
    t.add({t.num(w.real(), 0), t.num(w.imag(), 1), t.num(v.real(), 2), t.num(v.imag(), 3)});
    t.write(ctx.out);
    return;
  }
  if (o.fn == "digamma" || o.fn == "pochhammer") {
    const cplx w = parse_complex(o.w);
    if (w.imag() != 0.0) throw UsageError(o.fn + " takes a real --w");
    const double v = o.fn == "digamma" ? digamma(w.real()) : pochhammer(w.real(), o.n);
    CsvTable t("zmw.specfun." + o.fn + "/1", {"w", "n", "value"});
    t.add({t.num(w.real(), 0), std::to_string(o.n), t.num(v, 2)});
    t.write(ctx.out);
    return;
  }
  if (o.x_values.empty()) throw UsageError("--x is required for " + o.fn);
  if (o.fn == "whittaker" || o.fn == "whittaker-deriv") {
    const auto [kind, m] = parse_mu(o.mu);
    CsvTable t("zmw.specfun.whittaker/1",
               {"kappa", "mu_kind", "mu", "x", "value", "derivative", "validated"});
    for (double x : o.x_values) {
      const WhittakerValue v = whittaker_eval({o.kappa, kind, std::fabs(m), x});
      t.add({t.num(o.kappa, 0), kind == MuKind::real ? "real" : "imaginary", t.num(m, 2),
             t.num(x, 3), t.num(v.value, 4), t.num(v.derivative, 5), v.validated ? "1" : "0"});
    }
    t.write(ctx.out);
    return;
  }
  if (o.fn == "laguerre" || o.fn == "bessel-k") {
    const bool lag = o.fn == "laguerre";
    CsvTable t("zmw.specfun." + o.fn + "/1", {lag ? "n" : "nu", lag ? "alpha" : "unused", "x", "value"});
    for (double x : o.x_values) {
      const double v = lag ? laguerre_poly(o.n, o.alpha, x) : bessel_k(o.nu, x);
      t.add({lag ? std::to_string(o.n) : t.num(o.nu, 0), lag ? t.num(o.alpha, 1) : "0", t.num(x, 2),
             t.num(v, 3)});
    }
    t.write(ctx.out);
    return;
  }
  throw UsageError("unknown --fn '" + o.fn + "'");
}

// ------------------------------------------------------------------ kernels

std::vector<std::pair<int, int>> selected_blocks(const std::string& block) {
  static const char* names[2] = {"+", "-"};
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (block == "all" || block == std::string(names[i]) + names[j]) out.emplace_back(i, j);
    }
  }
  if (out.empty()) throw UsageError("--block must be ++, +-, -+, -- or all");
  return out;
}

std::string block_name(int i, int j) {
  return std::string(i ? "-" : "+") + (j ? "-" : "+");
}

void cmd_kernel_eval(Context& ctx) {
  const Options& o = ctx.o;
  if (o.x_values.empty() || o.y_values.empty()) throw UsageError("--x and --y are required");
  const auto blocks = selected_blocks(o.block);
  const Parameters& p = ctx.p();
  std::function<Block2(double, double)> eval;
  std::optional<MatrixWhittakerKernel> k;
  if (o.kernel == "whittaker") {
    k.emplace(p);
    eval = [&](double x, double y) { return k->evaluate(x, y); };
  } else if (o.kernel == "l") {
    eval = [&](double x, double y) { return l_kernel_blocks(x, y, p); };
  } else {
    throw UsageError("--kernel must be whittaker or l");
  }
  CsvTable t("zmw.kernel/1", {"kernel", "block", "x", "y", "value"});
  for (double x : o.x_values) {
    for (double y : o.y_values) {
      const Block2 b = eval(x, y);
      for (auto [i, j] : blocks) {
        t.add({o.kernel, block_name(i, j), t.num(x, 2), t.num(y, 3), t.num(b[i][j], 4)});
      }
    }
  }
  t.write(ctx.out);
}

void cmd_kernel_tail(Context& ctx) {
  const Options& o = ctx.o;
  if (o.x_values.empty() || o.y_values.empty()) throw UsageError("--xi and --eta are required");
  const auto blocks = selected_blocks(o.block);
  const Parameters& p = ctx.p();
  const bool l = o.tail_kernel_name == "L";
  if (!l && o.tail_kernel_name != "K") throw UsageError("--kernel must be K or L");
  CsvTable t("zmw.kernel.tail/1", {"kernel", "block", "xi", "eta", "value"});
  for (double xi : o.x_values) {
    for (double eta : o.y_values) {
      const Block2 b = l ? tail_l_kernel(xi, eta, p) : tail_kernel(xi, eta, p);
      for (auto [i, j] : blocks) {
        t.add({o.tail_kernel_name, block_name(i, j), t.num(xi, 2), t.num(eta, 3), t.num(b[i][j], 4)});
      }
    }
  }
  t.write(ctx.out);
}

// ---------------------------------------------------------------- gap-prob

void cmd_gap_prob(Context& ctx) {
  const Options& o = ctx.o;
  if (o.steps < 1) throw UsageError("--steps must be positive");
  if (!(o.tau_min > 0.0) || !(o.tau_max >= o.tau_min)) {
    throw UsageError("need 0 < --tau-min <= --tau-max");
  }
  const Parameters& p = ctx.p();
  CsvTable t("zmw.gap-prob/1", {"tau", "det", "refinement_shift", "nodes"});
  for (int i = 0; i < o.steps; ++i) {
    const double tau =
        o.steps == 1 ? o.tau_min : o.tau_min + (o.tau_max - o.tau_min) * i / (o.steps - 1.0);
    const FredholmResult r = gap_probability(p, tau);
    t.add({t.num(tau, 0), t.num(r.value, 1), t.num(r.shift, 2), std::to_string(r.nodes)});
  }
  t.write(ctx.out);
}

// ----------------------------------------------------------------- moments

void cmd_moments_crosscheck(Context& ctx) {
  const Options& o = ctx.o;
  if (o.kmax < 1) throw UsageError("--kmax must be positive");
  const Parameters& p = ctx.p();
  CsvTable t("zmw.moments.crosscheck/1", {"k", "combinatorial", "kernel", "relative_error"});
  for (int k = 1; k <= o.kmax; ++k) {
    const double comb = lifted_moment_combinatorial({k}, p);
    const double kern = diag_moment(k, p);
    t.add({std::to_string(k), t.num(comb, 1), t.num(kern, 2),
           t.num(std::fabs(kern - comb) / std::fabs(comb), 3)});
  }
  t.write(ctx.out);
}

void cmd_moments_mass(Context& ctx) {
  const Parameters& p = ctx.p();
  json doc = {{"schema", "zmw.moments.mass/1"},
              {"expected_alpha_mass", expected_alpha_mass(p)},
              {"expected_beta_mass", expected_beta_mass(p)},
              {"decay_constant", decay_constant(p)}};
  try {
    doc["rho1_first_moment"] = rho1_first_moment(p);
  } catch (const AdmissibilityError& e) {
    doc["rho1_first_moment"] = nullptr;
    doc["rho1_note"] = e.what();
  }
  write_json(ctx.out, doc);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse integer list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

void cmd_moments_sigma(Context& ctx) {
  const std::vector<int> ls = parse_int_list(ctx.o.ls);
  CsvTable t("zmw.moments.sigma/1", {"ls", "value"});
  std::string key;
  for (std::size_t i = 0; i < ls.size(); ++i) key += (i ? ";" : "") + std::to_string(ls[i]);
  t.add({key, t.num(sigma_moment(ls, ctx.p()), 1)});
  t.write(ctx.out);
}

// ----------------------------------------------------------------- sampler

FrobeniusScaling scaling_of(const std::string& s) {
  if (s == "p") return FrobeniusScaling::p_over_n;
  if (s == "p-half") return FrobeniusScaling::p_half_over_n;
  throw UsageError("--scaling must be p or p-half");
}

void cmd_sample(Context& ctx) {
  const Options& o = ctx.o;
  if (o.n < 0 || o.count < 0) throw UsageError("--n and --count must be nonnegative");
  const Parameters& p = ctx.p();
  const bool enumerate = o.method == "enumerate" || (o.method == "auto" && o.n <= kMaxZmeasure);
  if (o.method != "auto" && o.method != "enumerate" && o.method != "growth") {
    throw UsageError("--method must be auto, enumerate or growth");
  }
  const auto draws = enumerate ? sample_zmeasure(o.n, o.count, *o.seed, p)
                               : sample_growth_many(o.n, o.count, *o.seed, p);
  for (const Partition& l : draws) ctx.out << l.to_string() << '\n';
}

void cmd_mc(Context& ctx) {
  const Options& o = ctx.o;
  const Parameters& p = ctx.p();
  Statistic stat;
  double oracle = 0.0;
  if (o.statistic == "alpha-mass") {
    stat = Statistic::alpha_mass;
    oracle = expected_alpha_mass(p);
  } else if (o.statistic == "ptilde") {
    stat = Statistic::ptilde;
    oracle = sigma_moment({o.k - 1}, p);
  } else {
    throw UsageError("--statistic must be alpha-mass or ptilde");
  }
  const McEstimate e = mc_estimate(stat, o.k, o.n, o.count, *o.seed, p, scaling_of(o.scaling));
  json doc = {{"schema", "zmw.mc/1"},
              {"statistic", o.statistic},
              {"n", o.n},
              {"count", e.count},
              {"seed", *o.seed},
              {"scaling", o.scaling},
              {"mean", e.mean},
              {"stderr", e.standard_error},
              {"oracle", oracle},
              {"z_score", (e.mean - oracle) / e.standard_error}};
  if (stat == Statistic::ptilde) doc["k"] = o.k;
  write_json(ctx.out, doc);
}

// -------------------------------------------------------------------- tail

void cmd_tail(Context& ctx) {
  const Options& o = ctx.o;
  const Parameters& p = ctx.p();
  if (o.constants) {
    const TailConstants tc = TailConstants::from(p);
    json doc = {{"schema", "zmw.tail.constants/1"},
                {"c", tc.c},
                {"B", tc.B},
                {"A", tc.a_value},
                {"A_kind", tc.a_kind == MuKind::real ? "real" : "imaginary"},
                {"decay_constant", decay_constant(p)}};
    write_json(ctx.out, doc);
    return;
  }
  std::vector<std::pair<double, double>> grid;
  for (double xi = -1.0; xi <= 1.0; xi += 0.5) {
    for (double eta = -1.0; eta <= 1.0; eta += 0.5) grid.emplace_back(xi, eta);
  }
  CsvTable t("zmw.tail.limit/1", {"M", "sup_error"});
  for (const TailLimitRow& row : tail_limit_check(o.ms, grid, p)) {
    t.add({t.num(row.M, 0), t.num(row.sup_error, 1)});
  }
  t.write(ctx.out);
}

// ------------------------------------------------------------------ verify

int cmd_verify(Context& ctx) {
  const Parameters& p = ctx.p();
  const auto checks = run_suite(ctx.o.suite, p, ctx.o.verify_seed);
  json doc = report(checks, p, ctx.o.suite);
  doc["seed"] = ctx.o.verify_seed;
  ctx.out << doc.dump(2) << '\n';
  return all_passed(checks) ? kExitOk : kExitConvergence;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"z-measures, matrix Whittaker kernels, their tail process and gap probabilities",
               "zmw"};
  app.set_config("--config", "", "flat key=value file; command-line flags override it");
  app.require_subcommand(1, 1);
  app.fallthrough();

  auto* pz = app.add_option("--z", o.params.z, "z, e.g. 0.3 or 0.2+0.5i");
  auto* pzp = app.add_option("--zprime", o.params.zprime, "z' (default: conj(z))");
  auto* pa = app.add_option("--a", o.params.a, "a = (z+z')/2");
  auto* pmu = app.add_option("--mu", o.params.mu, "mu = (z-z')/2, e.g. 0.15 or 2i");
  auto* pp = app.add_option("--params", o.params.pairs, "z=..,zprime=.. or a=..,mu=..");
  pa->excludes(pz)->excludes(pzp)->excludes(pp);
  pmu->excludes(pz)->excludes(pzp)->excludes(pp);
  pp->excludes(pz)->excludes(pzp);
  app.add_option("--threads", o.threads, "worker thread cap (0 = hardware)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", o.out_path, "write the result to this file instead of stdout");

  std::function<int(Context&)> action;
  auto simple = [&action](std::function<void(Context&)> f) {
    return [&action, f] {
      action = [f](Context& c) {
        f(c);
        return kExitOk;
      };
    };
  };

  auto* specfun = app.add_subcommand("specfun", "special functions")->require_subcommand(1, 1);
  auto* sf_eval = specfun->add_subcommand("eval", "evaluate one special function");
  sf_eval->add_option("--fn", o.fn, "lgamma | digamma | pochhammer | whittaker | whittaker-deriv | laguerre | bessel-k")
      ->required()
      ->check(CLI::IsMember({"lgamma", "digamma", "pochhammer", "whittaker", "whittaker-deriv",
                             "laguerre", "bessel-k"}));
  sf_eval->add_option("--x", o.x_values, "argument(s)");
  sf_eval->add_option("--kappa", o.kappa, "Whittaker kappa");
  sf_eval->add_option("--mu", o.mu, "Whittaker mu: real or pure imaginary (e.g. 2i)");
  sf_eval->add_option("--n", o.n, "degree / Pochhammer length");
  sf_eval->add_option("--alpha", o.alpha, "Laguerre alpha");
  sf_eval->add_option("--nu", o.nu, "Bessel order");
  sf_eval->add_option("--w", o.w, "gamma-family argument (complex for lgamma)");
  sf_eval->callback(simple(cmd_specfun_eval));

  auto* kernel = app.add_subcommand("kernel", "kernel values")->require_subcommand(1, 1);
  auto* k_eval = kernel->add_subcommand("eval", "matrix Whittaker kernel or L-kernel on an (x, y) grid");
  k_eval->add_option("--x", o.x_values)->required();
  k_eval->add_option("--y", o.y_values)->required();
  k_eval->add_option("--block", o.block, "++ | +- | -+ | -- | all");
  k_eval->add_option("--kernel", o.kernel, "whittaker | l");
  k_eval->callback(simple(cmd_kernel_eval));
  auto* k_tail = kernel->add_subcommand("tail", "tail kernel K or its L-kernel on a (xi, eta) grid");
  k_tail->add_option("--xi", o.x_values)->required();
  k_tail->add_option("--eta", o.y_values)->required();
  k_tail->add_option("--block", o.block, "++ | +- | -+ | -- | all");
  k_tail->add_option("--kernel", o.tail_kernel_name, "K | L");
  k_tail->callback(simple(cmd_kernel_tail));

  auto* gap = app.add_subcommand("gap-prob", "P(largest lifted point < tau) on a tau grid");
  gap->add_option("--tau-min", o.tau_min);
  gap->add_option("--tau-max", o.tau_max);
  gap->add_option("--steps", o.steps, "number of rows");
  gap->callback(simple(cmd_gap_prob));

  auto* moments = app.add_subcommand("moments", "moment identities")->require_subcommand(1, 1);
  auto* cross = moments->add_subcommand("crosscheck", "signed lifted moments: characters vs kernel diagonal");
  cross->add_option("--kmax", o.kmax);
  cross->callback(simple(cmd_moments_crosscheck));
  moments->add_subcommand("mass", "E|alpha|, E|beta| and the rho_1 cross-check (JSON)")
      ->callback(simple(cmd_moments_mass));
  auto* sigma = moments->add_subcommand("sigma", "mixed moment E p~_{(l_1+1, ...)}");
  sigma->add_option("--ls", o.ls, "comma-separated l_i >= 0");
  sigma->callback(simple(cmd_moments_sigma));

  auto* sample = app.add_subcommand("sample", "exact z-measure samples, one partition per line");
  sample->add_option("--n", o.n)->required();
  sample->add_option("--count", o.count)->required();
  sample->add_option("--seed", o.seed)->required();
  sample->add_option("--method", o.method, "auto | enumerate | growth");
  sample->callback(simple(cmd_sample));

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate against its closed form (JSON)");
  mc->add_option("--statistic", o.statistic, "alpha-mass | ptilde");
  mc->add_option("--k", o.k, "power for ptilde");
  mc->add_option("--n", o.n)->required();
  mc->add_option("--count", o.count)->required();
  mc->add_option("--seed", o.seed)->required();
  mc->add_option("--scaling", o.scaling, "p | p-half");
  mc->callback(simple(cmd_mc));

  auto* tail = app.add_subcommand("tail", "tail-limit convergence table or tail constants");
  tail->add_option("--M", o.ms, "shifts M");
  tail->add_flag("--constants", o.constants, "print c, A, B as JSON instead");
  tail->callback(simple(cmd_tail));

  auto* verify = app.add_subcommand("verify", "invariant suite with a JSON pass/fail report");
  auto* suite_pos = verify->add_option("suite_name", o.suite, "suite name (same as --suite)")
                        ->check(CLI::IsMember(suite_names()));
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()))->excludes(suite_pos);
  verify->add_option("--seed", o.verify_seed, "seed for the sampler checks");
  verify->callback([&action] { action = cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (o.threads > 0) set_thread_count(o.threads);
  std::ostringstream buffer;
  Context ctx{o, buffer, std::nullopt};
  auto where = [&ctx] {
    return ctx.params ? " [params " + ctx.params->describe() + "]" : std::string();
  };
  int code = kExitOk;
  try {
    code = action ? action(ctx) : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AdmissibilityError& e) {
    err << "admissibility error: " << e.what() << where() << '\n';
    return kExitAdmissibility;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << where() << '\n';
    return kExitConvergence;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << where() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << where() << '\n';
    return kExitConvergence;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.out_path);
    if (!(f << buffer.str())) {
      err << "cannot write " << o.out_path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace zmw::cli

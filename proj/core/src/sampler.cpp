#include "zmw/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "zmw/error.hpp"
#include "zmw/parallel.hpp"

namespace zmw {
namespace {

// Cumulative table of M_n in canonical order.
struct WeightTable {
  std::vector<Partition> partitions;
  std::vector<double> cumulative;

  WeightTable(int n, const Parameters& params) {
    double acc = 0.0;
    for (auto& [lambda, w] : zmeasure(n, params)) {
      if (w < 0.0) {
        throw AdmissibilityError("sampler: negative z-measure weight for " + params.describe());
      }
      acc += w;
      partitions.push_back(std::move(lambda));
      cumulative.push_back(acc);
    }
  }

  const Partition& draw(double u) const {
    const double target = u * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    if (it == cumulative.end()) --it;
    return partitions[static_cast<std::size_t>(it - cumulative.begin())];
  }
};

template <typename Draw>
std::vector<Partition> draw_many(int count, std::uint64_t seed, Draw&& draw) {
  if (count < 0) throw DomainError("sampler: count must be nonnegative");
  std::vector<Partition> out(static_cast<std::size_t>(count));
  parallel_for(out.size(), [&](std::size_t i) {
    std::mt19937_64 rng(substream_seed(seed, i));
    out[i] = draw(rng);
  });
  return out;
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Partition> sample_zmeasure(int n, int count, std::uint64_t seed,
                                       const Parameters& params) {
  const WeightTable table(n, params);
  return draw_many(count, seed, [&](std::mt19937_64& rng) { return table.draw(uniform01(rng)); });
}

Partition sample_growth(int n, std::mt19937_64& rng, const Parameters& params) {
  if (n < 0) throw DomainError("sample_growth: n must be nonnegative");
  const double t = params.t();
  const double a = params.a();
  std::vector<int> rows;
  std::vector<int> addable_row;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> prob;
  for (int size = 0; size < n; ++size) {
    addable_row.clear();
    x.clear();
    y.clear();
    const int len = static_cast<int>(rows.size());
    for (int i = 0; i <= len; ++i) {
      const int cur = i < len ? rows[i] : 0;
      if (i == 0 || rows[i - 1] > cur) {
        addable_row.push_back(i);
        x.push_back(static_cast<double>(cur - i));
      }
      if (i < len && (i + 1 == len || rows[i + 1] < cur)) {
        y.push_back(static_cast<double>(cur - 1 - i));
      }
    }
    prob.assign(x.size(), 0.0);
    double total = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      double ratio = 1.0;
      for (double yj : y) ratio *= x[k] - yj;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i != k) ratio /= x[k] - x[i];
      }
      const double c = x[k];
      prob[k] = (c * c + 2.0 * a * c + t) / (t + size) * ratio;
      if (prob[k] < 0.0) {
        throw AdmissibilityError("sample_growth: negative transition probability for " +
                                 params.describe());
      }
      total += prob[k];
    }
    if (std::fabs(total - 1.0) > 1e-9) {
      throw ConvergenceError("sample_growth: transition probabilities sum to " +
                             std::to_string(total));
    }
    double u = uniform01(rng) * total;
    std::size_t pick = x.size() - 1;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (u < prob[k]) {
        pick = k;
        break;
      }
      u -= prob[k];
    }
    const int row = addable_row[pick];
    if (row == len) {
      rows.push_back(1);
    } else {
      ++rows[row];
    }
  }
  return Partition(std::move(rows));
}

std::vector<Partition> sample_growth_many(int n, int count, std::uint64_t seed,
                                          const Parameters& params) {
  return draw_many(count, seed,
                   [&](std::mt19937_64& rng) { return sample_growth(n, rng, params); });
}

PointConfiguration scaled_configuration(const Partition& lambda, int n, FrobeniusScaling scaling) {
  if (lambda.size() != n) throw DomainError("scaled_configuration: |lambda| != n");
  const Frobenius f = frobenius(lambda);
  const double shift = scaling == FrobeniusScaling::p_half_over_n ? 0.5 : 0.0;
  PointConfiguration omega;
  for (int i = 0; i < f.d; ++i) {
    const double alpha = (f.p[i] + shift) / n;
    const double beta = (f.q[i] + shift) / n;
    if (alpha > 0.0) omega.alphas.push_back(alpha);
    if (beta > 0.0) omega.betas.push_back(beta);
  }
  std::sort(omega.betas.begin(), omega.betas.end(), std::greater<>());
  return omega;
}

PointConfiguration lift_configuration(const PointConfiguration& omega, std::uint64_t seed,
                                      const Parameters& params) {
  if (omega.lifted) throw DomainError("lift_configuration: configuration is already lifted");
  std::mt19937_64 rng(substream_seed(seed, 0));
  std::gamma_distribution<double> gamma(params.t(), 1.0);
  const double s = gamma(rng);
  PointConfiguration out = omega;
  for (double& v : out.alphas) v *= s;
  for (double& v : out.betas) v *= s;
  out.lifted = true;
  return out;
}

PointConfiguration unlift_configuration(const PointConfiguration& omega) {
  const double s = omega.total();
  if (!(s > 0.0)) throw DomainError("unlift_configuration: empty configuration");
  PointConfiguration out = omega;
  for (double& v : out.alphas) v /= s;
  for (double& v : out.betas) v /= s;
  out.lifted = false;
  return out;
}

McEstimate mc_estimate(Statistic statistic, int k, int n, long count, std::uint64_t seed,
                       const Parameters& params, FrobeniusScaling scaling) {
  if (count < 2) throw DomainError("mc_estimate: count must be at least 2");
  if (n < 1) throw DomainError("mc_estimate: n must be positive");
  if (statistic == Statistic::ptilde && k < 1) throw DomainError("mc_estimate: k must be positive");

  auto value_of = [&](const Partition& lambda) {
    const PointConfiguration omega = scaled_configuration(lambda, n, scaling);
    if (statistic == Statistic::ptilde) return ptilde(k, omega);
    double s = 0.0;
    for (double v : omega.alphas) s += v;
    return s;
  };

  std::vector<double> values(static_cast<std::size_t>(count));
  if (n <= kMaxZmeasure) {
    const WeightTable table(n, params);
    parallel_for(values.size(), [&](std::size_t i) {
      std::mt19937_64 rng(substream_seed(seed, i));
      values[i] = value_of(table.draw(uniform01(rng)));
    });
  } else {
    parallel_for(values.size(), [&](std::size_t i) {
      std::mt19937_64 rng(substream_seed(seed, i));
      values[i] = value_of(sample_growth(n, rng, params));
    });
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(count);
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(count - 1);
  return McEstimate{mean, std::sqrt(var / static_cast<double>(count)), count};
}

}  // namespace zmw

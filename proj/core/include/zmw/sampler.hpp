#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zmw/partitions.hpp"

namespace zmw {

/// Seed of the i-th independent substream derived from a master seed
/// (splitmix64 finalizer).  Sample i always uses substream i, so results do
/// not depend on how samples are spread over threads.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);

/// i.i.d. draws from M_n by inverse CDF over the enumerated table (n ≤ 40).
std::vector<Partition> sample_zmeasure(int n, int count, std::uint64_t seed,
                                       const Parameters& params);

/**
 * One exact draw from M_n by growing the diagram box by box.  The Young-graph
 * transition λ → λ + □ (content c) has probability
 *   (z + c)(z' + c)/(t + |λ|) · dim(λ+□) / ((|λ|+1) dim λ),
 * and the dimension ratio is Kerov's interlacing product
 *   Π_j (x_k - y_j) / Π_{i≠k} (x_k - x_i)
 * over the contents x of addable and y of removable boxes.
 */
Partition sample_growth(int n, std::mt19937_64& rng, const Parameters& params);
std::vector<Partition> sample_growth_many(int n, int count, std::uint64_t seed,
                                          const Parameters& params);

enum class FrobeniusScaling { p_over_n, p_half_over_n };

/// α = p_i/n, β = q_i/n (or (p_i+½)/n, (q_i+½)/n); zero entries dropped.
PointConfiguration scaled_configuration(const Partition& lambda, int n,
                                        FrobeniusScaling scaling = FrobeniusScaling::p_over_n);

/// Multiplies every point by one Gamma(t, 1) draw.
PointConfiguration lift_configuration(const PointConfiguration& omega, std::uint64_t seed,
                                      const Parameters& params);
/// Divides by the coordinate sum.
PointConfiguration unlift_configuration(const PointConfiguration& omega);

enum class Statistic { alpha_mass, ptilde };

struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  long count = 0;
};

/// Monte Carlo mean and standard error of |α| or p̃_k over scaled
/// configurations of exact M_n samples (enumeration for n ≤ 40, growth above).
McEstimate mc_estimate(Statistic statistic, int k, int n, long count, std::uint64_t seed,
                       const Parameters& params,
                       FrobeniusScaling scaling = FrobeniusScaling::p_over_n);

}  // namespace zmw

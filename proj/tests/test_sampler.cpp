#include <doctest.h>

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "zmw/error.hpp"
#include "zmw/parallel.hpp"
#include "zmw/sampler.hpp"

using namespace zmw;

namespace {

// Pearson statistic over cells with expected count ≥ 5 (the rest pooled);
// returns the upper-tail p-value.
double chi_square_pvalue(const std::vector<Partition>& draws,
                         const std::vector<std::pair<Partition, double>>& law) {
  std::map<Partition, long> observed;
  for (const Partition& l : draws) ++observed[l];
  const double n = static_cast<double>(draws.size());
  double stat = 0.0;
  int cells = 0;
  double pooled_expected = 0.0;
  long pooled_observed = 0;
  for (const auto& [lambda, p] : law) {
    const double e = n * p;
    const long o = observed.count(lambda) ? observed.at(lambda) : 0;
    if (e < 5.0) {
      pooled_expected += e;
      pooled_observed += o;
      continue;
    }
    stat += (o - e) * (o - e) / e;
    ++cells;
  }
  if (pooled_expected >= 5.0) {
    stat += (pooled_observed - pooled_expected) * (pooled_observed - pooled_expected) / pooled_expected;
    ++cells;
  }
  REQUIRE(cells >= 2);
  const boost::math::chi_squared dist(cells - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

TEST_CASE("substreams") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(substream_seed(42, i));
  CHECK(seen.size() == 1000);
  CHECK(substream_seed(42, 7) == substream_seed(42, 7));
  CHECK(substream_seed(42, 7) != substream_seed(43, 7));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform01(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("enumeration sampler passes a chi-square test") {
  for (const Parameters& p : zmw::test::standard_sets()) {
    CAPTURE(p.describe());
    for (int n : {2, 4, 6}) {
      const auto draws = sample_zmeasure(n, 20000, 1234 + n, p);
      CHECK(chi_square_pvalue(draws, zmeasure(n, p)) > 1e-3);
    }
  }
}

TEST_CASE("growth sampler has the z-measure law") {
  for (const Parameters& p : {Parameters::complementary(0.3, 0.6), Parameters::principal({0.2, 0.5})}) {
    CAPTURE(p.describe());
    for (int n : {3, 6, 8}) {
      const auto draws = sample_growth_many(n, 20000, 99 + n, p);
      CHECK(std::all_of(draws.begin(), draws.end(), [n](const Partition& l) { return l.size() == n; }));
      CHECK(chi_square_pvalue(draws, zmeasure(n, p)) > 1e-3);
    }
  }
}

TEST_CASE("samples do not depend on the thread count") {
  const Parameters p = Parameters::complementary(0.3, 0.6);
  set_thread_count(1);
  const auto a = sample_growth_many(30, 64, 7, p);
  const auto c = sample_zmeasure(10, 64, 7, p);
  set_thread_count(4);
  const auto b = sample_growth_many(30, 64, 7, p);
  const auto d = sample_zmeasure(10, 64, 7, p);
  set_thread_count(0);
  CHECK(a == b);
  CHECK(c == d);
  CHECK(sample_growth_many(30, 64, 8, p) != a);
}

TEST_CASE("scaled configurations, lifting and unlifting") {
  const Partition l({3, 2, 1});
  const PointConfiguration w = scaled_configuration(l, 6);
  CHECK(w.alphas == std::vector<double>{2.0 / 6.0});
  CHECK(w.betas == std::vector<double>{2.0 / 6.0});
  const PointConfiguration h = scaled_configuration(l, 6, FrobeniusScaling::p_half_over_n);
  CHECK(h.alphas == std::vector<double>{2.5 / 6.0, 0.5 / 6.0});
  CHECK(h.total() == doctest::Approx(1.0));
  CHECK_THROWS_AS(scaled_configuration(l, 7), DomainError);

  const Parameters p = Parameters::complementary(0.3, 0.6);
  const PointConfiguration lifted = lift_configuration(h, 5, p);
  CHECK(lifted.lifted);
  CHECK(lifted.alphas[0] / lifted.alphas[1] == doctest::Approx(5.0));
  const PointConfiguration back = unlift_configuration(lifted);
  for (std::size_t i = 0; i < h.alphas.size(); ++i) CHECK(back.alphas[i] == doctest::Approx(h.alphas[i]));
  CHECK_THROWS_AS(lift_configuration(lifted, 5, p), DomainError);
}

TEST_CASE("Monte Carlo means agree with exact finite-n means") {
  const Parameters p = Parameters::principal({0.2, 0.5});
  const int n = 10;
  double alpha = 0.0;
  double p2 = 0.0;
  for (const auto& [lambda, w] : zmeasure(n, p)) {
    const PointConfiguration omega = scaled_configuration(lambda, n);
    for (double a : omega.alphas) alpha += w * a;
    p2 += w * ptilde(2, omega);
  }
  const McEstimate ea = mc_estimate(Statistic::alpha_mass, 0, n, 20000, 3, p);
  CHECK(ea.count == 20000);
  CHECK(std::fabs(ea.mean - alpha) <= 4.0 * ea.standard_error);
  const McEstimate ep = mc_estimate(Statistic::ptilde, 2, n, 20000, 3, p);
  CHECK(std::fabs(ep.mean - p2) <= 4.0 * ep.standard_error);
  CHECK_THROWS_AS(mc_estimate(Statistic::alpha_mass, 0, n, 1, 3, p), DomainError);
}

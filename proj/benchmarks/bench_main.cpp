#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "zmw/kernels.hpp"
#include "zmw/operators.hpp"
#include "zmw/partitions.hpp"
#include "zmw/specfun.hpp"

using namespace zmw;

namespace {

void BM_WhittakerPoint(benchmark::State& state) {
  const WhittakerArgs args{0.3, MuKind::imaginary, 0.5, static_cast<double>(state.range(0)) / 10.0};
  for (auto _ : state) benchmark::DoNotOptimize(whittaker_w(args));
}
BENCHMARK(BM_WhittakerPoint)->Arg(1)->Arg(10)->Arg(100);

// Batch continuation over a log-spaced grid, as used by the Nyström builders.
void BM_WhittakerBatch(benchmark::State& state) {
  std::vector<double> xs(state.range(0));
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 1e-3 * std::pow(1e5, double(i) / (xs.size() - 1));
  const WhittakerSolver solver(0.3, -0.25);
  for (auto _ : state) benchmark::DoNotOptimize(solver.evaluate(xs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WhittakerBatch)->Arg(64)->Arg(512);

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Partition> parts = enumerate_partitions(n);
  for (auto _ : state) {
    clear_character_cache();
    std::int64_t acc = 0;
    for (const Partition& l : parts) {
      for (const Partition& r : parts) acc += character(l, r);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ZMeasure(benchmark::State& state) {
  const Parameters p = Parameters::complementary(0.3, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(zmeasure(static_cast<int>(state.range(0)), p));
}
BENCHMARK(BM_ZMeasure)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Resolvent(benchmark::State& state) {
  const Parameters p = Parameters::principal({0.2, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(resolvent_identity_error(p));
}
BENCHMARK(BM_Resolvent)->Unit(benchmark::kMillisecond);

void BM_GapProbability(benchmark::State& state) {
  const Parameters p = Parameters::complementary(0.3, 0.6);
  const double tau = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gap_probability(p, tau));
}
BENCHMARK(BM_GapProbability)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

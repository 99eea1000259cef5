#include <benchmark/benchmark.h>

#include "exmc/discretize.hpp"
#include "exmc/kernel.hpp"
#include "exmc/matrices.hpp"
#include "exmc/spectrum.hpp"
#include "exmc/zoo.hpp"

using namespace exmc;

namespace {

PosteriorSpec ising_lattice() {
  std::vector<IsingEdge> edges;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int v = 3 * r + c;
      if (c < 2) edges.push_back({v, v + 1, 1.0});
      if (r < 2) edges.push_back({v, v + 3, 1.0});
    }
  }
  return PosteriorSpec(make_ising(9, std::move(edges), 0.1, ParamSpace::interval(0, 1)),
                       Prior::truncated_gaussian(0.3, 0.5, 0, 1), 511.0);
}

void run_steps(benchmark::State& state, const KernelSpec& spec, double theta) {
  ChainRng rng(1);
  for (auto _ : state) {
    theta = step(spec, theta, rng).theta;
    benchmark::DoNotOptimize(theta);
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_ExchangeStepTwoPoint(benchmark::State& state) {
  const KernelSpec spec(Algorithm::exchange, Proposal::discrete_uniform({0.25, 0.75}),
                        make_two_point_bernoulli().posterior());
  run_steps(state, spec, 0.25);
}
BENCHMARK(BM_ExchangeStepTwoPoint);

void BM_ExchangeStepExponentialGamma(benchmark::State& state) {
  const KernelSpec spec(Algorithm::exchange, Proposal::random_walk_gaussian(0.5),
                        make_exponential_gamma().posterior(1.0));
  run_steps(state, spec, 1.0);
}
BENCHMARK(BM_ExchangeStepExponentialGamma);

void BM_ExchangeStepBetaBinomial(benchmark::State& state) {
  const KernelSpec spec(Algorithm::exchange, Proposal::independence_uniform(0.2, 0.8),
                        make_beta_binomial(10, 0.2, 0.8, 2, 2).posterior(3.0));
  run_steps(state, spec, 0.5);
}
BENCHMARK(BM_ExchangeStepBetaBinomial);

void BM_ExchangeStepIsing3x3(benchmark::State& state) {
  const KernelSpec spec(Algorithm::exchange, Proposal::random_walk_gaussian(0.2), ising_lattice());
  run_steps(state, spec, 0.5);
}
BENCHMARK(BM_ExchangeStepIsing3x3);

void BM_BuildExchangeMatrix(benchmark::State& state) {
  const auto mp = make_beta_binomial(10, 0.2, 0.8, 2, 2);
  GridSpec g;
  g.lo = 0.2;
  g.hi = 0.8;
  g.size = static_cast<std::size_t>(state.range(0));
  const auto problem = discretize(mp.posterior(3.0), Proposal::independence_uniform(0.2, 0.8), g);
  for (auto _ : state) benchmark::DoNotOptimize(build_exchange_matrix(problem));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildExchangeMatrix)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_BuildExchangeMatrixContinuum(benchmark::State& state) {
  const auto mp = make_exponential_gamma();
  GridSpec g;
  g.size = static_cast<std::size_t>(state.range(0));
  const auto problem = discretize(mp.posterior(1.0), Proposal::independence_gamma(2, 2), g);
  for (auto _ : state) benchmark::DoNotOptimize(build_exchange_matrix(problem));
}
BENCHMARK(BM_BuildExchangeMatrixContinuum)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const auto mp = make_beta_binomial(10, 0.2, 0.8, 2, 2);
  GridSpec g;
  g.lo = 0.2;
  g.hi = 0.8;
  g.size = static_cast<std::size_t>(state.range(0));
  const auto chain = build_exchange_matrix(
      discretize(mp.posterior(3.0), Proposal::independence_uniform(0.2, 0.8), g));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(chain));
}
BENCHMARK(BM_Spectrum)->Arg(51)->Arg(101)->Arg(401);

}  // namespace

BENCHMARK_MAIN();

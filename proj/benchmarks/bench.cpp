#include <benchmark/benchmark.h>

#include "wavechaos/bounds.hpp"
#include "wavechaos/gpsim.hpp"
#include "wavechaos/harness.hpp"
#include "wavechaos/rng.hpp"
#include "wavechaos/wavelets.hpp"

using namespace wavechaos;

static void bm_sigma_j(benchmark::State& state) {
  const analytic_wavelet w{3.0, 1.0};
  const auto model = spectral_model::ornstein_uhlenbeck(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(sigma_j_squared(w, model, state.range(0)));
}
BENCHMARK(bm_sigma_j)->Arg(0)->Arg(4)->Arg(10);

static void bm_cross_covariance(benchmark::State& state) {
  const analytic_wavelet w{3.0, 1.0};
  const auto model = spectral_model::ornstein_uhlenbeck(1.0);
  const auto a = nonlinearity::power(1.0);
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(u_cross_covariance(w, model, a, 0, 0, tau, 20));
    tau += 0.01;
  }
}
BENCHMARK(bm_cross_covariance);

static void bm_synthesize(benchmark::State& state) {
  const analytic_wavelet w{3.0, 1.0};
  const auto model = spectral_model::ornstein_uhlenbeck(1.0);
  grid_config gc;
  gc.n_time = static_cast<std::size_t>(state.range(0));
  gc.dt = 0.125;
  const frequency_grid grid = build_grid(model, w, {0}, gc);
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(synthesize(model, w, grid, {0}, seed++, false));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_synthesize)->Arg(4096)->Arg(65536);

static void bm_kolmogorov_1d(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> samples(n);
  for (std::size_t i = 0; i < n; i += 2) {
    const auto [a, b] = counter_rng::normal_pair(7, i / 2);
    samples[i] = a;
    if (i + 1 < n) samples[i + 1] = b;
  }
  for (auto _ : state) {
    auto copy = samples;
    benchmark::DoNotOptimize(empirical_kolmogorov_1d(copy, 0.0, 1.0));
  }
}
BENCHMARK(bm_kolmogorov_1d)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();

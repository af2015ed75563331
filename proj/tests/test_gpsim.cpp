#include <doctest.h>

#include <cmath>

#include "wavechaos/gpsim.hpp"
#include "wavechaos/quadrature.hpp"
#include "wavechaos/rng.hpp"
#include "wavechaos/wavelets.hpp"

using namespace wavechaos;

namespace {

const analytic_wavelet morse{3.0, 1.0};

frequency_grid small_grid(const spectral_model& m, const std::vector<int>& j) {
  grid_config gc;
  gc.n_time = 2048;
  gc.dt = 0.125;
  return build_grid(m, morse, j, gc);
}

}  // namespace

TEST_CASE("grid cells tile the spectrum") {
  const auto ou = spectral_model::ornstein_uhlenbeck(1.0);
  const frequency_grid grid = small_grid(ou, {0});
  REQUIRE(grid.cell_mass.size() == grid.n_freq / 2 + 1);
  double mass = grid.cell_mass[0];
  for (std::size_t k = 1; k < grid.cell_mass.size(); ++k)
    mass += 2.0 * grid.cell_mass[k];  // Hermitian mirror carries equal mass
  // Cells tile the spectrum up to the cutoff; adding the analytic tail
  // beyond it recovers R_X(0) = 1.
  const double cutoff = (grid.n_freq / 2 + 0.5) * grid.d_lambda;
  const double tail =
      2.0 * integrate_to_infinity([&](double l) { return ou.density(l); },
                                  cutoff);
  CHECK(mass + tail == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(grid.d_lambda == doctest::Approx(2.0 * M_PI / (2048.0 * 0.125)));
}

TEST_CASE("synthesis is bit-reproducible per seed") {
  const auto ou = spectral_model::ornstein_uhlenbeck(1.0);
  const frequency_grid grid = small_grid(ou, {0, 2});
  const path_bundle a = synthesize(ou, morse, grid, {0, 2}, 42);
  const path_bundle b = synthesize(ou, morse, grid, {0, 2}, 42);
  CHECK(a.x == b.x);
  CHECK(a.w.at(0) == b.w.at(0));
  CHECK(a.w.at(2) == b.w.at(2));
  const path_bundle c = synthesize(ou, morse, grid, {0, 2}, 43);
  CHECK(a.x != c.x);
  CHECK(a.valid_begin == grid.n_time / 4);
  CHECK(a.valid_end == 3 * grid.n_time / 4);
}

TEST_CASE("Monte Carlo marginals match the model") {
  const auto ou = spectral_model::ornstein_uhlenbeck(1.0);
  const std::vector<int> j_set{0};
  const frequency_grid grid = small_grid(ou, j_set);
  const double sig_sq = sigma_j_squared(morse, ou, 0);

  const std::size_t n_paths = 800;
  std::vector<double> xs, res, ims;
  for (std::size_t p = 0; p < n_paths; ++p) {
    const path_bundle b = synthesize(
        ou, morse, grid, j_set, counter_rng::derive_stream(7, p));
    const std::size_t mid = grid.n_time / 2;
    xs.push_back(b.x[mid]);
    res.push_back(b.w.at(0)[mid].real());
    ims.push_back(b.w.at(0)[mid].imag());
  }
  auto mean_of = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    return m / static_cast<double>(v.size());
  };
  auto var_of = [&](const std::vector<double>& v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
  };
  const double n = static_cast<double>(n_paths);

  // Var(X) -> R_X(0) = 1 within 3 standard errors (se ~ var sqrt(2/n)).
  CHECK(std::fabs(var_of(xs) - 1.0) < 3.0 * std::sqrt(2.0 / n));
  // Var(Re W), Var(Im W) -> sigma_0^2.
  CHECK(std::fabs(var_of(res) - sig_sq) <
        3.0 * sig_sq * std::sqrt(2.0 / n));
  CHECK(std::fabs(var_of(ims) - sig_sq) <
        3.0 * sig_sq * std::sqrt(2.0 / n));
  // Corr(Re, Im) at equal time vanishes by odd symmetry of the pairing.
  double cross = 0.0;
  const double mr = mean_of(res), mi = mean_of(ims);
  for (std::size_t i = 0; i < n_paths; ++i)
    cross += (res[i] - mr) * (ims[i] - mi);
  cross /= (n - 1.0);
  const double corr = cross / std::sqrt(var_of(res) * var_of(ims));
  CHECK(std::fabs(corr) < 3.0 / std::sqrt(n));
}

TEST_CASE("means are zero and the process is real") {
  const auto ou = spectral_model::ornstein_uhlenbeck(1.0);
  const frequency_grid grid = small_grid(ou, {0});
  const path_bundle b = synthesize(ou, morse, grid, {0}, 11);
  for (double x : b.x) CHECK(std::isfinite(x));
  double m = 0.0;
  for (std::size_t i = b.valid_begin; i < b.valid_end; ++i) m += b.x[i];
  m /= static_cast<double>(b.valid_end - b.valid_begin);
  CHECK(std::fabs(m) < 1.0);  // one path: loose sanity, exact law in MC test
}

TEST_CASE("counter RNG draws standard normal pairs") {
  double m = 0.0, v = 0.0;
  const std::size_t n = 200000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = counter_rng::normal_pair(99, i);
    m += a + b;
    v += a * a + b * b;
  }
  m /= static_cast<double>(2 * n);
  v = v / static_cast<double>(2 * n) - m * m;
  CHECK(std::fabs(m) < 3.0 / std::sqrt(2.0 * n));
  CHECK(std::fabs(v - 1.0) < 3.0 * std::sqrt(2.0 / (2.0 * n)));
  // Keyed determinism.
  CHECK(counter_rng::normal_pair(99, 5) == counter_rng::normal_pair(99, 5));
  CHECK(counter_rng::normal_pair(99, 5) != counter_rng::normal_pair(98, 5));
}

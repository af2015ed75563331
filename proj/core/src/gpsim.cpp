#include "wavechaos/gpsim.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

#include "wavechaos/rng.hpp"

namespace wavechaos {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Plan cache; plans are created once per size and executed concurrently on
// per-call buffers (FFTW_UNALIGNED makes the buffers interchangeable).
class fft_backward {
public:
  static void run(std::vector<std::complex<double>>& data) {
    fftw_plan plan = instance().plan_for(data.size());
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, ptr, ptr);
  }

private:
  static fft_backward& instance() {
    static fft_backward cache;
    return cache;
  }

  fftw_plan plan_for(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> scratch(n);
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), ptr, ptr,
                                      FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(n, plan);
    return plan;
  }

  std::mutex mutex_;
  std::unordered_map<std::size_t, fftw_plan> plans_;
};

double windowed_integrand(const spectral_model& model,
                          const analytic_wavelet& w, int j, double lambda) {
  double f;
  if (model.kind() == spectral_model::family::power_law &&
      model.beta() < 1.0 && lambda == 0.0) {
    return 0.0;  // window vanishes at 0 faster than the density blows up
  }
  f = model.density(lambda);
  return psi_r_hat_sq(w, std::ldexp(lambda, j)) * f;
}

}  // namespace

frequency_grid build_grid(const spectral_model& model,
                          const analytic_wavelet& w,
                          const std::vector<int>& j_set,
                          const grid_config& config) {
  if (j_set.empty()) throw std::invalid_argument("build_grid: empty j_set");
  if (!is_power_of_two(config.n_time))
    throw std::invalid_argument("n_time must be a power of two");
  if (config.dt <= 0.0) throw std::invalid_argument("dt must be positive");
  if (!is_power_of_two(std::max<std::size_t>(config.oversample, 1)))
    throw std::invalid_argument("oversample must be a power of two");

  const double d_lambda = 2.0 * M_PI / (config.n_time * config.dt);

  // Peak of the windowed integrand over the requested scales.
  double peak = 0.0;
  for (int j : j_set) {
    const double lambda_peak = std::ldexp(w.peak_frequency(), -j);
    for (int i = 0; i <= 512; ++i) {
      const double lambda =
          lambda_peak * std::exp((i - 256) * (std::log(64.0) / 256.0));
      peak = std::max(peak, windowed_integrand(model, w, j, lambda));
    }
  }
  if (peak <= 0.0) throw std::invalid_argument("degenerate windowed spectrum");

  constexpr std::size_t n_freq_cap = std::size_t{1} << 26;
  std::size_t n_freq =
      std::max<std::size_t>(config.n_time * std::max<std::size_t>(
                                                config.oversample, 1),
                            2);
  for (;; n_freq *= 2) {
    const double lambda_max = (n_freq / 2) * d_lambda;
    double worst = 0.0;
    for (int j : j_set)
      worst = std::max(worst, windowed_integrand(model, w, j, lambda_max));
    if (worst <= 1e-12 * peak) break;
    if (n_freq >= n_freq_cap)
      throw size_error(
          "frequency cutoff unreachable: windowed spectrum still " +
          std::to_string(worst / peak) + " of peak at n_freq cap; increase "
          "n_time or dt (suggested n_freq > " +
          std::to_string(2 * n_freq_cap) + ")");
  }

  frequency_grid grid;
  grid.n_freq = n_freq;
  grid.n_time = config.n_time;
  grid.d_lambda = d_lambda;
  grid.dt = config.dt;
  grid.cell_mass.resize(n_freq / 2 + 1);
  const double half = 0.5 * d_lambda;
  double total = model.cell_integral(-half, half);
  grid.cell_mass[0] = total;
  for (std::size_t k = 1; k <= n_freq / 2; ++k) {
    const double center = k * d_lambda;
    const double mass = model.cell_integral(center - half, center + half);
    grid.cell_mass[k] = mass;
    total += (k == n_freq / 2) ? mass : 2.0 * mass;
  }
  grid.total_mass = total;
  return grid;
}

path_bundle synthesize(const spectral_model& model, const analytic_wavelet& w,
                       const frequency_grid& grid,
                       const std::vector<int>& j_set, std::uint64_t seed,
                       bool with_x) {
  if (grid.n_freq == 0) throw std::invalid_argument("invalid grid");
  const std::size_t n = grid.n_freq;
  const std::size_t half = n / 2;

  // One shared noise draw: cell k > 0 gets W_k = sqrt(mass_k) (g1 + i g2)/
  // sqrt(2); the negative-frequency mirror is the conjugate; the zero and
  // Nyquist cells are real.
  std::vector<std::complex<double>> noise(n, {0.0, 0.0});
  {
    const auto [g0, gn] = counter_rng::normal_pair(seed, 0);
    noise[0] = {g0 * std::sqrt(grid.cell_mass[0]), 0.0};
    noise[half] = {gn * std::sqrt(grid.cell_mass[half]), 0.0};
  }
  for (std::size_t k = 1; k < half; ++k) {
    const auto [g1, g2] = counter_rng::normal_pair(seed, k);
    const double amp = std::sqrt(0.5 * grid.cell_mass[k]);
    noise[k] = {amp * g1, amp * g2};
    noise[n - k] = std::conj(noise[k]);
  }

  path_bundle bundle;
  bundle.seed = seed;
  bundle.dt = grid.dt;
  const std::size_t stride = n / grid.n_time;
  bundle.times.resize(grid.n_time);
  for (std::size_t i = 0; i < grid.n_time; ++i)
    bundle.times[i] = static_cast<double>(i) * grid.dt;
  bundle.valid_begin = grid.n_time / 4;
  bundle.valid_end = grid.n_time - grid.n_time / 4;

  std::vector<std::complex<double>> work(n);
  if (with_x) {
    work = noise;
    fft_backward::run(work);
    bundle.x.resize(grid.n_time);
    for (std::size_t i = 0; i < grid.n_time; ++i)
      bundle.x[i] = work[i * stride].real() + model.mean();
  }

  for (int j : j_set) {
    // Analytic wavelet: psi_r_hat + i psi_i_hat = psi_hat, one-sided.
    std::fill(work.begin(), work.end(), std::complex<double>{0.0, 0.0});
    for (std::size_t k = 1; k <= half; ++k) {
      const double lambda = grid.frequency(k);
      const std::complex<double> gain = psi_hat(w, std::ldexp(lambda, j));
      work[k] = noise[k] * gain;
    }
    fft_backward::run(work);
    auto& series = bundle.w[j];
    series.resize(grid.n_time);
    for (std::size_t i = 0; i < grid.n_time; ++i)
      series[i] = work[i * stride];
  }
  return bundle;
}

}  // namespace wavechaos

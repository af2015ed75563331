#ifndef WAVECHAOS_GPSIM_HPP
#define WAVECHAOS_GPSIM_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "wavechaos/spectra.hpp"
#include "wavechaos/wavelets.hpp"

namespace wavechaos {

/// Grid and synthesis parameters coming from the run configuration.
struct grid_config {
  std::size_t n_time = 4096;   // power of two
  double dt = 0.125;
  std::size_t oversample = 1;  // initial n_freq = oversample * n_time
};

/// Symmetric frequency grid for spectral synthesis. Bin k of the FFT layout
/// carries frequency k * d_lambda for k <= n_freq/2 and (k - n_freq) *
/// d_lambda above; the bin containing 0 holds the exact singular cell mass.
struct frequency_grid {
  std::size_t n_freq = 0;
  std::size_t n_time = 0;
  double d_lambda = 0.0;
  double dt = 0.0;
  std::vector<double> cell_mass;  // size n_freq/2 + 1: bins 0 .. n_freq/2
  double total_mass = 0.0;

  double frequency(std::size_t bin) const { return bin * d_lambda; }
};

class size_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Chooses d_lambda = 2 pi / (n_time dt) and grows n_freq (powers of two)
/// until the wavelet-windowed integrand at the cutoff is below 1e-12 of its
/// peak for every requested scale. Throws size_error with a suggested n_freq
/// when the cap (2^26) is hit.
frequency_grid build_grid(const spectral_model& model,
                          const analytic_wavelet& w,
                          const std::vector<int>& j_set,
                          const grid_config& config);

/// One simulated path: the process X on t_k = k dt plus the complex wavelet
/// coefficient series W[j]X for each requested scale, all driven by a single
/// white-noise draw. The central half of the grid is the valid region.
struct path_bundle {
  std::vector<double> times;
  std::vector<double> x;
  std::map<int, std::vector<std::complex<double>>> w;
  std::uint64_t seed = 0;
  double dt = 0.0;
  std::size_t valid_begin = 0;
  std::size_t valid_end = 0;
};

/// Hermitian-symmetrized spectral synthesis: one complex standard Gaussian
/// per positive-frequency cell scaled by the square root of the cell mass;
/// scale series are the same draw filtered by psi_hat(2^j lambda).
/// Deterministic in (grid, seed).
path_bundle synthesize(const spectral_model& model, const analytic_wavelet& w,
                       const frequency_grid& grid,
                       const std::vector<int>& j_set, std::uint64_t seed,
                       bool with_x = true);

}  // namespace wavechaos

#endif

#ifndef WAVECHAOS_HARNESS_HPP
#define WAVECHAOS_HARNESS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wavechaos/bounds.hpp"
#include "wavechaos/chaos.hpp"
#include "wavechaos/gpsim.hpp"
#include "wavechaos/spectra.hpp"
#include "wavechaos/transform.hpp"
#include "wavechaos/wavelets.hpp"

namespace wavechaos {

/// Standard normal CDF and its inverse (Wichura-grade accuracy).
double normal_cdf(double z);
double normal_quantile(double p);

/// P(X <= h, Y <= k) for standard bivariate normal with correlation rho,
/// via the single-integral reduction over the correlation angle.
double bivariate_normal_cdf(double h, double k, double rho);

/// Exact Kolmogorov statistic of the empirical CDF against N(mean, variance):
/// sup over the sorted samples, both one-sided limits at each point.
double empirical_kolmogorov_1d(std::vector<double> samples, double mean,
                               double variance);

/// Wasserstein-1 by quantile coupling: mean |x_(k) - Q((k - 1/2) / N)| over
/// order statistics, Q the N(mean, variance) quantile function.
double empirical_w1_1d(std::vector<double> samples, double mean,
                       double variance);

/// Lower-orthant Kolmogorov statistic in d = 2 over a product-quadrant grid
/// (grid_points per axis, default 200): sup over grid cells of
/// |empirical P(F1 <= z1, F2 <= z2) - Gaussian orthant probability|.
double empirical_kolmogorov_2d(
    const std::vector<std::array<double, 2>>& samples,
    const std::array<double, 2>& mean,
    const std::array<std::array<double, 2>, 2>& covariance,
    int grid_points = 200);

/// One Monte Carlo experiment: which process, transform, vector coordinates,
/// J ladder, and sampling effort. Grid sizing is automatic unless overridden.
struct clt_run_config {
  spectral_model model = spectral_model::ornstein_uhlenbeck(1.0);
  analytic_wavelet w{3.0, 1.0};
  nonlinearity a = nonlinearity::power(2.0);
  low_pass lp{low_pass::family::gaussian};
  std::vector<f_coordinate> coords{{0, 0.0}};  // d = coords.size() <= 2
  std::vector<int> J_list{4, 6, 8};
  std::size_t n_paths = 10000;
  std::uint64_t seed = 0;
  double eps = 0.1;          // rate-envelope epsilon
  int threads = 0;           // 0 = WAVECHAOS_THREADS or hardware
  std::size_t n_time = 0;    // 0 = automatic per J
  double dt = 0.0;           // 0 = automatic from min scale
  bool with_kappa = true;    // assemble the limit-covariance prediction
  bool keep_samples = false; // retain per-path F vectors in the report
};

struct clt_row {
  int J = 0;
  std::size_t n_paths = 0;
  std::vector<double> mean;                 // sample mean of F
  std::vector<std::vector<double>> cov;     // sample covariance of F
  std::vector<double> mean_se;              // MC standard error per coordinate
  double d_kol = 0.0;
  double w1 = 0.0;                          // NaN when d = 2
  std::vector<double> limit_variance;       // kappa prediction diagonal
  double envelope_w = 0.0;                  // smooth-Wasserstein-rate envelope
  double envelope_kol = 0.0;                // Kolmogorov-rate envelope
  double wall_seconds = 0.0;
  std::string status = "ok";
  std::vector<std::vector<double>> samples; // only if keep_samples
};

struct clt_report {
  std::vector<clt_row> rows;
  kappa_matrix kappa;          // empty if with_kappa = false or d failure
  bool kappa_available = false;
  double fitted_slope = 0.0;   // log-log slope of d_kol vs J (diagnostic)
  bool slope_available = false;
};

clt_report run_clt_experiment(const clt_run_config& cfg);

struct identity_result {
  std::string name;
  bool pass = false;
  std::string witness;  // counterexample tuple on failure
};

/// Exact-arithmetic and closed-form identity checks: the sign-permutation
/// identity across evaluators, the Laguerre closed forms against quadrature,
/// and the Theta-ratio window.
std::vector<identity_result> run_identity_suite();

}  // namespace wavechaos

#endif

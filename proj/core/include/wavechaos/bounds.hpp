#ifndef WAVECHAOS_BOUNDS_HPP
#define WAVECHAOS_BOUNDS_HPP

#include <complex>
#include <vector>

#include "wavechaos/chaos.hpp"
#include "wavechaos/spectra.hpp"
#include "wavechaos/transform.hpp"
#include "wavechaos/wavelets.hpp"

namespace wavechaos {

/// Cross-spectral window integral
///   G_{m,n}(tau) = int_0^inf e^{i tau lambda} psi_r_hat(2^{j_m} lambda)
///                  conj(psi_r_hat(2^{j_n} lambda)) f_X(lambda) dlambda,
/// by oscillation-aware quadrature.
std::complex<double> cross_window_integral(const analytic_wavelet& w,
                                           const spectral_model& model,
                                           int j_m, int j_n, double tau);

/// Chaos-series covariance
///   Cov(U^A[j_m]X(tau), U^A[j_n]X(0))
///     = pref * sum_{ell <= K even} ell! c_ell^2 C(ell, ell/2)
///       (sigma_m sigma_n)^{-ell} |G_{m,n}(tau)|^ell,
/// with pref = (sigma_m sigma_n)^nu for Power and 1 for Log. The reduction
/// is validated against independent oracles in the test suite.
double u_cross_covariance(const analytic_wavelet& w,
                          const spectral_model& model, const nonlinearity& a,
                          int j_m, int j_n, double tau, int K);

struct kappa_matrix {
  std::vector<int> j_list;
  std::vector<double> t_list;
  std::vector<std::vector<double>> kappa;      // kappa_{m,n}
  std::vector<std::vector<double>> limit_cov;  // kappa * phase-weighted phi term
  double tau_max = 0.0;
};

/// kappa_{m,n} = (1/2pi) int Cov(U[j_m](tau), U[j_n](0)) dtau (trapezoid,
/// tau_max grown until the integrand tail is < 1e-6 of its peak), assembled
/// into the limit covariance with the closed-form phi factor. Requires
/// 2 alpha + beta >= 1.
kappa_matrix build_kappa_matrix(const analytic_wavelet& w,
                                const spectral_model& model,
                                const nonlinearity& a,
                                const std::vector<int>& j_list,
                                const std::vector<double>& t_list,
                                const low_pass& lp, int K,
                                double tau_max_hint = 0.0);

/// Wasserstein lower bound between U^A[j]X_1 and U^A[j]X_2:
///   Power(nu): 2^{nu/2} Gamma(nu/2+1) |sigma_1^nu - sigma_2^nu|
///   Log:       |ln sigma_1 - ln sigma_2|
double wasserstein_lower_bound(const nonlinearity& a, double sigma_1j,
                               double sigma_2j);

enum class rate_regime { exponential, polynomial_power, polynomial_log };

struct rate_point {
  int J;
  int K;             // truncation schedule 2 floor((J/4) log_3 2)
  double tail_term;  // 2 K^{-nu/2 - 1/4 + eps} (zero in the finite-chaos case)
  double stein_term; // 2^{-J/2} 3^K K^{-nu - 3/2 + eps}
  double envelope;   // unit-constant regime envelope
};

struct rate_curve {
  nonlinearity a;
  rate_regime regime;
  double eps;
  std::vector<rate_point> points;
};

/// Theorem-rate envelopes (shape only, unit constants):
///   exponential:      2^{-J/2}
///   polynomial power: J^{-nu/2 - 1/4 + eps}
///   polynomial log:   J^{-1/4}
rate_curve smooth_wasserstein_rate(const nonlinearity& a,
                                   const std::vector<int>& J_list,
                                   double eps);

/// Cube-root-converted Kolmogorov envelopes: 2^{-J/6},
/// J^{-nu/6 - 1/12 + eps}, J^{-1/12}.
rate_curve kolmogorov_rate(const nonlinearity& a,
                           const std::vector<int>& J_list, double eps);

/// Explicit Kolmogorov-from-smooth-Wasserstein combiner:
///   3 ((sqrt(2 ln d) + 2) / sqrt(min_var))^{2/3} s^{1/3} + s.
double kolmogorov_combiner(int d, double min_variance,
                           double smooth_wasserstein);

/// K(J) = 2 floor((J/4) log_3 2).
int truncation_schedule(int J);

}  // namespace wavechaos

#endif

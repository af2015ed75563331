#include "wavechaos/bounds.hpp"

#include <cmath>

#include "wavechaos/quadrature.hpp"

namespace wavechaos {

namespace {

double log_binom(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void require_short_range(const analytic_wavelet& w,
                         const spectral_model& model) {
  const double beta =
      model.kind() == spectral_model::family::power_law ? model.beta() : 1.0;
  if (2.0 * w.alpha + beta < 1.0)
    throw std::domain_error(
        "configuration violates 2 alpha + beta >= 1: the nonlinear process "
        "retains long memory and the covariance integral does not decay");
}

}  // namespace

std::complex<double> cross_window_integral(const analytic_wavelet& w,
                                           const spectral_model& model,
                                           int j_m, int j_n, double tau) {
  const double scale_m = std::ldexp(1.0, j_m);
  const double scale_n = std::ldexp(1.0, j_n);
  // psi_r_hat is real on lambda > 0: half of the Morse spectrum.
  auto window = [&](double lambda) {
    return psi_r_hat(w, scale_m * lambda).real() *
           psi_r_hat(w, scale_n * lambda).real();
  };
  // Decay reach of the product window.
  const double peak_mu = w.peak_frequency();
  const double coarse = std::max(scale_m, scale_n);
  double mu_max = std::max(peak_mu, 1.0);
  while (std::exp(-std::pow(mu_max, w.gamma)) > 1e-18) mu_max *= 2.0;
  const double lambda_max = mu_max / std::min(scale_m, scale_n);

  const bool singular = model.kind() == spectral_model::family::power_law &&
                        model.beta() < 1.0;
  double split = singular ? std::min(1.0 / coarse, lambda_max) : 0.0;

  double re = 0.0;
  double im = 0.0;
  if (singular) {
    const double p = 2.0 * w.alpha + model.beta();
    auto regular_part = [&](double lambda, bool use_sin) {
      // window * cx * lambda^{-2 alpha} with the 0*inf hazard removed.
      const double body = 0.25 * std::pow(scale_m * scale_n, w.alpha) *
                          std::exp(-std::pow(scale_m * lambda, w.gamma) -
                                   std::pow(scale_n * lambda, w.gamma)) *
                          model.cx(lambda);
      return body * (use_sin ? std::sin(tau * lambda) : std::cos(tau * lambda));
    };
    if (p > 1.0) {
      re += integrate(
          [&](double l) { return window(l) * model.density(l) * std::cos(tau * l); },
          0.0, split, 1e-9);
      im += integrate(
          [&](double l) { return window(l) * model.density(l) * std::sin(tau * l); },
          0.0, split, 1e-9);
    } else {
      re += integrate_power_singularity(
          [&](double l) { return regular_part(l, false); }, p, split, 1e-9);
      im += integrate_power_singularity(
          [&](double l) { return regular_part(l, true); }, p, split, 1e-9);
    }
  }
  auto amp = [&](double lambda) {
    return window(lambda) * model.density(lambda);
  };
  re += integrate_oscillatory(amp, tau, split, lambda_max, false, 1e-9);
  im += integrate_oscillatory(amp, tau, split, lambda_max, true, 1e-9);
  return {re, im};
}

double u_cross_covariance(const analytic_wavelet& w,
                          const spectral_model& model, const nonlinearity& a,
                          int j_m, int j_n, double tau, int K) {
  if (K < 2 || K % 2 != 0)
    throw std::invalid_argument("u_cross_covariance: K must be even >= 2");
  require_short_range(w, model);
  const double sigma_m = sigma_j(w, model, j_m);
  const double sigma_n = sigma_j(w, model, j_n);
  const double g = std::abs(cross_window_integral(w, model, j_m, j_n, tau));
  const double rho = g / (sigma_m * sigma_n);  // in (0, 1/2] at tau = 0

  double series = 0.0;
  for (int ell = 2; ell <= K; ell += 2) {
    const double base = ell_factorial_c_ell_sq(a, ell);
    if (base == 0.0) continue;
    series += base * std::exp(log_binom(ell, ell / 2)) * std::pow(rho, ell);
  }
  double pref = 1.0;
  if (a.kind == nonlinearity::family::power)
    pref = std::pow(sigma_m * sigma_n, a.nu);
  return pref * series;
}

kappa_matrix build_kappa_matrix(const analytic_wavelet& w,
                                const spectral_model& model,
                                const nonlinearity& a,
                                const std::vector<int>& j_list,
                                const std::vector<double>& t_list,
                                const low_pass& lp, int K,
                                double tau_max_hint) {
  if (j_list.empty() || j_list.size() != t_list.size())
    throw std::invalid_argument("kappa matrix needs matching j and t lists");
  require_short_range(w, model);
  const std::size_t d = j_list.size();

  int j_min = j_list[0];
  int j_max = j_list[0];
  for (int j : j_list) {
    j_min = std::min(j_min, j);
    j_max = std::max(j_max, j);
  }
  const double d_tau = std::ldexp(1.0, j_min) / 16.0;

  kappa_matrix result;
  result.j_list = j_list;
  result.t_list = t_list;
  result.kappa.assign(d, std::vector<double>(d, 0.0));
  result.limit_cov.assign(d, std::vector<double>(d, 0.0));

  // Per-scale sigmas and per-order series weights, computed once; the
  // trapezoid below evaluates the covariance at many tau values.
  std::vector<double> sigma(d);
  for (std::size_t m = 0; m < d; ++m) sigma[m] = sigma_j(w, model, j_list[m]);
  std::vector<double> weight;  // ell! c_ell^2 C(ell, ell/2) for ell = 2,4,...
  for (int ell = 2; ell <= K; ell += 2)
    weight.push_back(ell_factorial_c_ell_sq(a, ell) *
                     std::exp(log_binom(ell, ell / 2)));

  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = m; n < d; ++n) {
      const double pref = a.kind == nonlinearity::family::power
                              ? std::pow(sigma[m] * sigma[n], a.nu)
                              : 1.0;
      auto cov_at = [&](double tau) {
        const double g =
            std::abs(cross_window_integral(w, model, j_list[m], j_list[n], tau));
        const double rho = g / (sigma[m] * sigma[n]);
        double series = 0.0;
        double rho_pow = rho * rho;
        for (std::size_t i = 0; i < weight.size(); ++i) {
          series += weight[i] * rho_pow;
          rho_pow *= rho * rho;
        }
        return pref * series;
      };
      const double peak = cov_at(0.0);
      double tau_max = tau_max_hint > 0.0 ? tau_max_hint
                                          : 8.0 * std::ldexp(1.0, j_max);
      while (std::fabs(cov_at(tau_max)) > 1e-6 * std::fabs(peak)) {
        tau_max *= 2.0;
        if (tau_max > 1e7)
          throw std::domain_error(
              "covariance integrand does not decay; check configuration");
      }
      // Even in tau (stationarity): integrate [0, tau_max] and double.
      const std::size_t steps =
          static_cast<std::size_t>(std::ceil(tau_max / d_tau));
      double acc = 0.5 * peak;
      for (std::size_t s = 1; s < steps; ++s) acc += cov_at(s * d_tau);
      acc += 0.5 * cov_at(steps * d_tau);
      const double integral = 2.0 * acc * d_tau;
      const double kappa_val = integral / (2.0 * M_PI);
      result.kappa[m][n] = kappa_val;
      result.kappa[n][m] = kappa_val;
      result.tau_max = std::max(result.tau_max, tau_max);
      const double phase = lp.phase_weighted_l2(t_list[m] - t_list[n]);
      result.limit_cov[m][n] = kappa_val * phase;
      result.limit_cov[n][m] = kappa_val * phase;
    }
  }
  return result;
}

double wasserstein_lower_bound(const nonlinearity& a, double sigma_1j,
                               double sigma_2j) {
  if (sigma_1j <= 0.0 || sigma_2j <= 0.0)
    throw std::domain_error("wasserstein_lower_bound: sigma must be positive");
  if (a.kind == nonlinearity::family::log)
    return std::fabs(std::log(sigma_1j) - std::log(sigma_2j));
  return std::pow(2.0, a.nu / 2.0) * std::tgamma(a.nu / 2.0 + 1.0) *
         std::fabs(std::pow(sigma_1j, a.nu) - std::pow(sigma_2j, a.nu));
}

int truncation_schedule(int J) {
  const double log3_2 = std::log(2.0) / std::log(3.0);
  return 2 * static_cast<int>(std::floor(J / 4.0 * log3_2));
}

namespace {

rate_regime regime_of(const nonlinearity& a) {
  if (a.kind == nonlinearity::family::log) return rate_regime::polynomial_log;
  return a.finite_chaos() ? rate_regime::exponential
                          : rate_regime::polynomial_power;
}

double envelope_value(rate_regime regime, const nonlinearity& a, int J,
                      double eps, bool kolmogorov) {
  switch (regime) {
    case rate_regime::exponential:
      return std::pow(2.0, kolmogorov ? -J / 6.0 : -J / 2.0);
    case rate_regime::polynomial_power: {
      const double expo = kolmogorov ? -(a.nu / 6.0 + 1.0 / 12.0 - eps)
                                     : -(a.nu / 2.0 + 0.25 - eps);
      return std::pow(static_cast<double>(J), expo);
    }
    case rate_regime::polynomial_log:
      return std::pow(static_cast<double>(J),
                      kolmogorov ? -1.0 / 12.0 : -0.25);
  }
  return 0.0;
}

rate_curve build_rate_curve(const nonlinearity& a,
                            const std::vector<int>& J_list, double eps,
                            bool kolmogorov) {
  const rate_regime regime = regime_of(a);
  if (regime == rate_regime::polynomial_power &&
      (eps <= 0.0 || eps > 0.5))
    throw std::invalid_argument("eps must lie in (0, 0.5]");
  rate_curve curve;
  curve.a = a;
  curve.regime = regime;
  curve.eps = eps;
  const double nu_eff = a.kind == nonlinearity::family::log ? 0.0 : a.nu;
  const double eps_eff = regime == rate_regime::polynomial_log ? 0.0 : eps;
  for (int J : J_list) {
    rate_point p;
    p.J = J;
    p.K = truncation_schedule(J);
    if (regime == rate_regime::exponential) {
      p.tail_term = 0.0;
      p.stein_term = std::pow(2.0, -J / 2.0);
    } else {
      const int K = std::max(p.K, 2);
      p.tail_term = 2.0 * std::pow(static_cast<double>(K),
                                   -nu_eff / 2.0 - 0.25 + eps_eff);
      p.stein_term = std::pow(2.0, -J / 2.0) * std::pow(3.0, K) *
                     std::pow(static_cast<double>(K),
                              -nu_eff - 1.5 + eps_eff);
    }
    p.envelope = envelope_value(regime, a, J, eps_eff, kolmogorov);
    curve.points.push_back(p);
  }
  return curve;
}

}  // namespace

rate_curve smooth_wasserstein_rate(const nonlinearity& a,
                                   const std::vector<int>& J_list,
                                   double eps) {
  return build_rate_curve(a, J_list, eps, false);
}

rate_curve kolmogorov_rate(const nonlinearity& a,
                           const std::vector<int>& J_list, double eps) {
  return build_rate_curve(a, J_list, eps, true);
}

double kolmogorov_combiner(int d, double min_variance,
                           double smooth_wasserstein) {
  if (d < 1 || min_variance <= 0.0)
    throw std::domain_error("kolmogorov_combiner: d >= 1, min variance > 0");
  const double front =
      (std::sqrt(2.0 * std::log(static_cast<double>(d))) + 2.0) /
      std::sqrt(min_variance);
  return 3.0 * std::pow(front, 2.0 / 3.0) *
             std::cbrt(smooth_wasserstein) +
         smooth_wasserstein;
}

}  // namespace wavechaos

#include "wavechaos/wavelets.hpp"

#include <cmath>

#include "wavechaos/quadrature.hpp"

namespace wavechaos {

double analytic_wavelet::peak_frequency() const {
  return std::pow(alpha / gamma, 1.0 / gamma);
}

std::complex<double> psi_hat(const analytic_wavelet& w, double lambda) {
  if (lambda < 0.0) return {0.0, 0.0};
  if (lambda == 0.0) return {0.0, 0.0};
  return {std::pow(lambda, w.alpha) * std::exp(-std::pow(lambda, w.gamma)),
          0.0};
}

std::complex<double> psi_r_hat(const analytic_wavelet& w, double lambda) {
  if (lambda == 0.0) return {0.0, 0.0};
  if (lambda > 0.0) return 0.5 * psi_hat(w, lambda);
  return 0.5 * std::conj(psi_hat(w, -lambda));
}

std::complex<double> psi_i_hat(const analytic_wavelet& w, double lambda) {
  const double s = (lambda > 0.0) ? 1.0 : (lambda < 0.0 ? -1.0 : 0.0);
  return std::complex<double>(0.0, -s) * psi_r_hat(w, lambda);
}

double psi_r_hat_sq(const analytic_wavelet& w, double lambda) {
  const double a = std::fabs(lambda);
  if (a == 0.0) return 0.0;
  const double v =
      std::pow(a, w.alpha) * std::exp(-std::pow(a, w.gamma));
  return 0.25 * v * v;
}

double low_pass::phi(double t) const {
  switch (kind_) {
    case family::gaussian:
      return std::exp(-t * t);
    case family::laplace:
      return std::exp(-std::fabs(t));
    case family::cauchy:
      return 1.0 / (1.0 + t * t);
  }
  return 0.0;
}

double low_pass::phi_hat(double lambda) const {
  switch (kind_) {
    case family::gaussian:
      return std::sqrt(M_PI) * std::exp(-lambda * lambda / 4.0);
    case family::laplace:
      return 2.0 / (1.0 + lambda * lambda);
    case family::cauchy:
      return M_PI * std::exp(-std::fabs(lambda));
  }
  return 0.0;
}

double low_pass::phi_J(int J, double t) const {
  const double s = std::ldexp(1.0, -J);
  return s * phi(s * t);
}

double low_pass::phi_J_hat(int J, double lambda) const {
  return phi_hat(std::ldexp(lambda, J));
}

double low_pass::phi_hat_l2_sq() const {
  switch (kind_) {
    case family::gaussian:
      // int pi e^{-lambda^2/2} = pi sqrt(2 pi)
      return M_PI * std::sqrt(2.0 * M_PI);
    case family::laplace:
      // int 4 / (1+lambda^2)^2 = 2 pi
      return 2.0 * M_PI;
    case family::cauchy:
      // int pi^2 e^{-2|lambda|} = pi^2
      return M_PI * M_PI;
  }
  return 0.0;
}

double low_pass::phase_weighted_l2(double delta) const {
  const double d = std::fabs(delta);
  switch (kind_) {
    case family::gaussian:
      return M_PI * std::sqrt(2.0 * M_PI) * std::exp(-d * d / 2.0);
    case family::laplace:
      return 2.0 * M_PI * (1.0 + d) * std::exp(-d);
    case family::cauchy:
      return 4.0 * M_PI * M_PI / (4.0 + d * d);
  }
  return 0.0;
}

low_pass::family low_pass_family_from_string(const std::string& s) {
  if (s == "gaussian") return low_pass::family::gaussian;
  if (s == "laplace") return low_pass::family::laplace;
  if (s == "cauchy") return low_pass::family::cauchy;
  throw std::invalid_argument("unknown lowpass.kind '" + s +
                              "' (valid: gaussian, laplace, cauchy)");
}

std::string to_string(low_pass::family k) {
  switch (k) {
    case low_pass::family::gaussian:
      return "gaussian";
    case low_pass::family::laplace:
      return "laplace";
    case low_pass::family::cauchy:
      return "cauchy";
  }
  return "?";
}

namespace {
// lim_{lambda -> 0} windowed(lambda) * cx(lambda) * lambda^{-2 alpha}
// = 0.5 * scale^{2 alpha} * cx(0).
double limit_at_zero(const analytic_wavelet& w, const spectral_model& model,
                     double scale) {
  return 0.5 * std::pow(scale, 2.0 * w.alpha) * model.cx_at_0();
}
}  // namespace

double sigma_j_squared(const analytic_wavelet& w, const spectral_model& model,
                       int j) {
  const double scale = std::ldexp(1.0, j);
  // Even integrand: 2 int_0^inf |psi_r_hat(2^j lambda)|^2 f(lambda) dlambda.
  auto windowed = [&](double lambda) {
    return 2.0 * psi_r_hat_sq(w, scale * lambda);
  };
  // Cutoff where the Morse window has decayed to ~1e-20 of its peak.
  const double mu_peak = w.peak_frequency();
  double mu_max = std::max(mu_peak, 1.0);
  const double peak_val = psi_r_hat_sq(w, mu_peak);
  while (psi_r_hat_sq(w, mu_max) > 1e-20 * peak_val) mu_max *= 2.0;
  const double lambda_max = mu_max / scale;

  if (model.kind() == spectral_model::family::power_law && model.beta() < 1.0) {
    // Integrand behaves like lambda^{2 alpha + beta - 1} at the origin.
    const double p = 2.0 * w.alpha + model.beta();
    const double split = std::min(1.0 / scale, lambda_max);
    double head;
    if (p > 1.0) {
      head = integrate(
          [&](double lambda) {
            return windowed(lambda) * model.density(lambda);
          },
          0.0, split, 1e-9);
    } else {
      // Pull lambda^{p-1} out; the remaining factor
      // windowed(lambda) * cx(lambda) * lambda^{1-2 alpha... } is bounded:
      // windowed ~ lambda^{2 alpha} and we divide by lambda^{p - beta}.
      // windowed * cx * lambda^{-2 alpha} evaluated without the 0 * inf
      // hazard: 0.5 * scale^{2 alpha} * e^{-2 (scale lambda)^gamma} * cx.
      head = integrate_power_singularity(
          [&](double lambda) {
            return limit_at_zero(w, model, scale) / model.cx_at_0() *
                   std::exp(-2.0 * std::pow(scale * lambda, w.gamma)) *
                   model.cx(lambda);
          },
          p, split, 1e-9);
    }
    const double tail = integrate(
        [&](double lambda) { return windowed(lambda) * model.density(lambda); },
        split, lambda_max, 1e-9);
    return head + tail;
  }
  return integrate(
      [&](double lambda) { return windowed(lambda) * model.density(lambda); },
      0.0, lambda_max, 1e-9);
}

double sigma_j(const analytic_wavelet& w, const spectral_model& model, int j) {
  return std::sqrt(sigma_j_squared(w, model, j));
}

}  // namespace wavechaos

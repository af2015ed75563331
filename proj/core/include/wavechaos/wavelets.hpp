#ifndef WAVECHAOS_WAVELETS_HPP
#define WAVECHAOS_WAVELETS_HPP

#include <complex>
#include <string>

#include "wavechaos/spectra.hpp"

namespace wavechaos {

/// Generalized Morse wavelet, frequency domain only:
///   psi_hat(lambda) = lambda^alpha e^{-lambda^gamma} on lambda >= 0.
/// gamma = 1 is the Cauchy wavelet of order alpha.
struct analytic_wavelet {
  double alpha;
  double gamma;

  analytic_wavelet(double a, double g) : alpha(a), gamma(g) {
    if (a <= 0.0 || g <= 0.0)
      throw std::invalid_argument("Morse parameters must be positive");
  }

  /// Frequency of the spectral peak, (alpha/gamma)^{1/gamma}.
  double peak_frequency() const;
};

std::complex<double> psi_hat(const analytic_wavelet& w, double lambda);

/// Hermitian-symmetric real part: half of psi_hat on lambda > 0, conjugate
/// mirror on lambda < 0, zero at the origin.
std::complex<double> psi_r_hat(const analytic_wavelet& w, double lambda);

/// Hilbert pair: psi_i_hat(lambda) = -i sgn(lambda) psi_r_hat(lambda).
std::complex<double> psi_i_hat(const analytic_wavelet& w, double lambda);

/// |psi_r_hat(lambda)|^2 as a plain real (quadrature workhorse).
double psi_r_hat_sq(const analytic_wavelet& w, double lambda);

/// Dilation by scale j: part_hat(2^j lambda).
template <typename PartHat>
std::complex<double> scaled_hat(PartHat&& part_hat, const analytic_wavelet& w,
                                int j, double lambda) {
  return part_hat(w, std::ldexp(lambda, j));
}

/// Low-pass catalog. The three transforms are exact closed forms:
///   Gaussian phi(t) = e^{-t^2},      phi_hat = sqrt(pi) e^{-lambda^2/4}
///   Laplace  phi(t) = e^{-|t|},      phi_hat = 2 / (1 + lambda^2)
///   Cauchy   phi(t) = (1+t^2)^{-1},  phi_hat = pi e^{-|lambda|}
class low_pass {
public:
  enum class family { gaussian, laplace, cauchy };

  explicit low_pass(family k) : kind_(k) {}

  family kind() const { return kind_; }

  double phi(double t) const;
  double phi_hat(double lambda) const;

  /// phi_J(t) = 2^{-J} phi(t / 2^J).
  double phi_J(int J, double t) const;
  /// phi_J_hat(lambda) = phi_hat(2^J lambda).
  double phi_J_hat(int J, double lambda) const;

  /// ||phi_hat||_2^2 (closed form).
  double phi_hat_l2_sq() const;

  /// int e^{i lambda delta} |phi_hat(lambda)|^2 dlambda (closed form, real).
  double phase_weighted_l2(double delta) const;

private:
  family kind_;
};

low_pass::family low_pass_family_from_string(const std::string& s);
std::string to_string(low_pass::family k);

/// Per-scale standard deviation sigma_j of Re (or Im) of W[j]X:
///   sigma_j^2 = int |psi_r_hat(2^j lambda)|^2 f_X(lambda) dlambda.
/// Adaptive quadrature with an explicit split at 0, relative tolerance 1e-8.
double sigma_j(const analytic_wavelet& w, const spectral_model& model, int j);

double sigma_j_squared(const analytic_wavelet& w, const spectral_model& model,
                       int j);

}  // namespace wavechaos

#endif

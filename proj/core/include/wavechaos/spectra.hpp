#ifndef WAVECHAOS_SPECTRA_HPP
#define WAVECHAOS_SPECTRA_HPP

#include <stdexcept>
#include <string>

namespace wavechaos {

/// Closed catalog of even profiles C_X for the power-law family. Arbitrary
/// callables are not accepted: cell integrals split off the |lambda|^{beta-1}
/// singularity exactly and need a smooth remainder.
enum class profile_kind { constant, exp_decay, rational_decay };

/// Spectral density of the input process under one of two families:
///   OrnsteinUhlenbeck(c): f(lambda) = (c/pi) / (lambda^2 + c^2)
///   PowerLaw(beta, C_X):  f(lambda) = C_X(lambda) |lambda|^{beta-1}
/// beta = 1 is the bounded (weakly dependent) case, handled uniformly.
class spectral_model {
public:
  enum class family { ornstein_uhlenbeck, power_law };

  static spectral_model ornstein_uhlenbeck(double c, double mean = 0.0);
  static spectral_model power_law(double beta, double cx_at_0,
                                  profile_kind profile = profile_kind::constant,
                                  double profile_scale = 1.0,
                                  double mean = 0.0);

  family kind() const { return kind_; }
  double ou_rate() const { return c_; }
  double beta() const { return beta_; }
  double cx_at_0() const { return cx_at_0_; }
  profile_kind profile() const { return profile_; }
  double profile_scale() const { return profile_scale_; }
  double mean() const { return mean_; }

  /// Profile value C_X(lambda); even, bounded, C_X(0) = cx_at_0.
  double cx(double lambda) const;

  /// f_X(lambda). Power law with beta < 1 is singular at 0: lambda = 0 is a
  /// domain error there (use cell_integral for mass around the origin).
  double density(double lambda) const;

  /// R_X(t). OU is exact e^{-c|t|}; the power-law family is computed by
  /// Fourier quadrature (tolerance 1e-6) and requires a decaying profile.
  double covariance(double t) const;

  /// Mass integral of f_X over [lo, hi]; lo/hi may be +-infinity. A cell
  /// containing 0 uses the exact antiderivative of the singular part plus a
  /// quadrature of the smooth remainder.
  double cell_integral(double lo, double hi) const;

  /// True when the density has finite total mass (constant-profile power law
  /// with any beta has a non-integrable tail).
  bool has_finite_total_mass() const;

private:
  spectral_model() = default;

  /// Frequency beyond which the profile contributes less than ~1e-14.
  double tail_cutoff() const;

  family kind_ = family::ornstein_uhlenbeck;
  double c_ = 1.0;
  double beta_ = 1.0;
  double cx_at_0_ = 1.0;
  profile_kind profile_ = profile_kind::constant;
  double profile_scale_ = 1.0;
  double mean_ = 0.0;
};

std::string to_string(profile_kind p);

}  // namespace wavechaos

#endif

#include "wavechaos/spectra.hpp"

#include <cmath>
#include <limits>

#include "wavechaos/quadrature.hpp"

namespace wavechaos {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

spectral_model spectral_model::ornstein_uhlenbeck(double c, double mean) {
  if (c <= 0.0) throw std::invalid_argument("OU rate c must be positive");
  spectral_model m;
  m.kind_ = family::ornstein_uhlenbeck;
  m.c_ = c;
  m.mean_ = mean;
  return m;
}

spectral_model spectral_model::power_law(double beta, double cx_at_0,
                                         profile_kind profile,
                                         double profile_scale, double mean) {
  if (beta <= 0.0 || beta > 1.0)
    throw std::invalid_argument("power-law beta must be in (0, 1]");
  if (cx_at_0 <= 0.0)
    throw std::invalid_argument("cx_at_0 must be positive");
  if (profile_scale <= 0.0)
    throw std::invalid_argument("profile_scale must be positive");
  spectral_model m;
  m.kind_ = family::power_law;
  m.beta_ = beta;
  m.cx_at_0_ = cx_at_0;
  m.profile_ = profile;
  m.profile_scale_ = profile_scale;
  m.mean_ = mean;
  return m;
}

double spectral_model::cx(double lambda) const {
  const double x = profile_scale_ * std::fabs(lambda);
  switch (profile_) {
    case profile_kind::constant:
      return cx_at_0_;
    case profile_kind::exp_decay:
      return cx_at_0_ * std::exp(-x);
    case profile_kind::rational_decay:
      return cx_at_0_ / (1.0 + x * x);
  }
  return cx_at_0_;
}

double spectral_model::density(double lambda) const {
  if (kind_ == family::ornstein_uhlenbeck)
    return (c_ / M_PI) / (lambda * lambda + c_ * c_);
  if (beta_ < 1.0 && lambda == 0.0)
    throw std::domain_error(
        "power-law density is singular at lambda = 0; use cell_integral");
  // 0^0 = 1 convention makes beta = 1 uniform.
  return cx(lambda) * std::pow(std::fabs(lambda), beta_ - 1.0);
}

bool spectral_model::has_finite_total_mass() const {
  if (kind_ == family::ornstein_uhlenbeck) return true;
  return profile_ != profile_kind::constant;
}

double spectral_model::covariance(double t) const {
  if (kind_ == family::ornstein_uhlenbeck) return std::exp(-c_ * std::fabs(t));
  if (!has_finite_total_mass())
    throw std::domain_error(
        "covariance undefined: constant-profile power law has a "
        "non-integrable spectral tail");
  // R_X(t) = 2 int_0^inf cos(lambda t) C_X(lambda) lambda^{beta-1} dlambda.
  const double at = std::fabs(t);
  auto smooth = [this, at](double lambda) {
    return cx(lambda) * std::cos(at * lambda);
  };
  const double split = 1.0;
  double head;
  if (beta_ < 1.0) {
    head = integrate_power_singularity(smooth, beta_, split, 1e-8);
  } else {
    head = integrate(smooth, 0.0, split, 1e-8);
  }
  auto tail_integrand = [this, at](double lambda) {
    return cx(lambda) * std::pow(lambda, beta_ - 1.0) * std::cos(at * lambda);
  };
  double tail;
  if (at > 1.0) {
    // Oscillation-aware panels; profile decay bounds the reach.
    const double cutoff = tail_cutoff();
    auto amp = [this](double lambda) {
      return cx(lambda) * std::pow(lambda, beta_ - 1.0);
    };
    tail = integrate_oscillatory(amp, at, split, cutoff, false, 1e-8);
  } else {
    tail = integrate_to_infinity(tail_integrand, split, 1e-8, 1e-10);
  }
  return 2.0 * (head + tail);
}

double spectral_model::cell_integral(double lo, double hi) const {
  if (!(lo < hi)) throw std::invalid_argument("cell_integral requires lo < hi");
  if (kind_ == family::ornstein_uhlenbeck) {
    auto F = [this](double x) {
      if (x == inf) return 0.5;
      if (x == -inf) return -0.5;
      return std::atan(x / c_) / M_PI;
    };
    return F(hi) - F(lo);
  }
  // Power law. Evenness folds everything onto [0, inf).
  if (lo < 0.0) {
    if (hi <= 0.0) return cell_integral(-hi, -lo);
    return cell_integral(0.0, -lo) + cell_integral(0.0, hi);
  }
  const bool unbounded = (hi == inf);
  if (unbounded && !has_finite_total_mass())
    throw std::domain_error(
        "cell_integral over an unbounded cell needs a decaying profile");
  if (lo == 0.0) {
    // Exact singular part cx(0) * split^beta / beta plus smooth remainder on
    // [0, split], then regular quadrature beyond.
    const double split = unbounded ? std::min(1.0 / profile_scale_, 1.0)
                                   : std::min(hi, 1.0 / profile_scale_);
    const double exact = cx_at_0_ * std::pow(split, beta_) / beta_;
    auto remainder = [this](double lambda) { return cx(lambda) - cx_at_0_; };
    double rem;
    if (beta_ < 1.0) {
      rem = integrate_power_singularity(remainder, beta_, split, 1e-10);
    } else {
      rem = integrate(remainder, 0.0, split, 1e-10);
    }
    double beyond = 0.0;
    if (unbounded || hi > split) beyond = cell_integral(split, hi);
    return exact + rem + beyond;
  }
  if (unbounded) {
    return integrate_to_infinity(
        [this](double lambda) { return density(lambda); }, lo, 1e-10, 1e-10);
  }
  return integrate([this](double lambda) { return density(lambda); }, lo, hi,
                   1e-10);
}

double spectral_model::tail_cutoff() const {
  // Reach where the profile has decayed below 1e-14 of its peak.
  switch (profile_) {
    case profile_kind::exp_decay:
      return 14.0 * std::log(10.0) / profile_scale_;
    case profile_kind::rational_decay:
      return 1e7 / profile_scale_;
    case profile_kind::constant:
      return 1e6;
  }
  return 1e6;
}

std::string to_string(profile_kind p) {
  switch (p) {
    case profile_kind::constant:
      return "constant";
    case profile_kind::exp_decay:
      return "exp";
    case profile_kind::rational_decay:
      return "rational";
  }
  return "?";
}

}  // namespace wavechaos

#include <doctest.h>

#include <cmath>

#include "wavechaos/quadrature.hpp"
#include "wavechaos/spectra.hpp"

using namespace wavechaos;

TEST_CASE("OU density has unit mass and exact exponential covariance") {
  const auto m = spectral_model::ornstein_uhlenbeck(2.0);
  CHECK(m.cell_integral(-std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity()) ==
        doctest::Approx(1.0).epsilon(1e-10));
  for (double t : {0.0, 0.5, 1.0, 3.0})
    CHECK(m.covariance(t) == doctest::Approx(std::exp(-2.0 * t)));
  CHECK(m.density(0.0) == doctest::Approx(2.0 / (M_PI * 4.0)));
  CHECK(m.has_finite_total_mass());
}

TEST_CASE("OU cell integrals are additive and match direct quadrature") {
  const auto m = spectral_model::ornstein_uhlenbeck(1.0);
  const double whole = m.cell_integral(-2.0, 3.0);
  CHECK(whole == doctest::Approx(m.cell_integral(-2.0, 0.5) +
                                 m.cell_integral(0.5, 3.0))
                     .epsilon(1e-12));
  const double quad =
      integrate([&](double l) { return m.density(l); }, -2.0, 3.0, 1e-12);
  CHECK(whole == doctest::Approx(quad).epsilon(1e-10));
}

TEST_CASE("power-law singular cell mass uses the exact antiderivative") {
  // Constant profile: int_{-h}^{h} c |l|^{b-1} dl = 2 c h^b / b.
  const auto m = spectral_model::power_law(0.5, 3.0);
  const double h = 0.01;
  CHECK(m.cell_integral(-h, h) ==
        doctest::Approx(2.0 * 3.0 * std::pow(h, 0.5) / 0.5).epsilon(1e-10));
  // One-sided cell containing 0.
  CHECK(m.cell_integral(0.0, h) ==
        doctest::Approx(3.0 * std::pow(h, 0.5) / 0.5).epsilon(1e-10));
  CHECK_FALSE(m.has_finite_total_mass());
}

TEST_CASE("power-law density is singular at 0 for beta < 1") {
  const auto m = spectral_model::power_law(0.5, 1.0);
  CHECK_THROWS_AS(m.density(0.0), std::domain_error);
  // beta = 1 is the bounded case.
  const auto bounded = spectral_model::power_law(1.0, 2.0);
  CHECK(bounded.density(0.0) == doctest::Approx(2.0));
}

TEST_CASE("decaying-profile covariance matches Fourier quadrature") {
  const auto m =
      spectral_model::power_law(1.0, 1.0, profile_kind::exp_decay, 1.0);
  // R(t) = int cx e^{-|l|} e^{i t l} dl = 2 / (1 + t^2).
  for (double t : {0.0, 1.0, 2.5})
    CHECK(m.covariance(t) == doctest::Approx(2.0 / (1.0 + t * t))
                                 .epsilon(1e-5));
  // Constant profile has no decaying covariance representation.
  const auto flat = spectral_model::power_law(0.5, 1.0);
  CHECK_THROWS(flat.covariance(1.0));
}

TEST_CASE("profiles are even and match their closed forms") {
  const auto e =
      spectral_model::power_law(0.7, 2.0, profile_kind::exp_decay, 3.0);
  CHECK(e.cx(1.5) == doctest::Approx(2.0 * std::exp(-4.5)));
  CHECK(e.cx(-1.5) == doctest::Approx(e.cx(1.5)));
  const auto r =
      spectral_model::power_law(0.7, 2.0, profile_kind::rational_decay, 2.0);
  CHECK(r.cx(1.0) == doctest::Approx(2.0 / 5.0));
  CHECK(r.cx(0.0) == doctest::Approx(2.0));
}

#include <doctest.h>

#include <cmath>

#include "wavechaos/bounds.hpp"
#include "wavechaos/quadrature.hpp"

using namespace wavechaos;

namespace {

const analytic_wavelet morse{3.0, 1.0};
const auto ou = spectral_model::ornstein_uhlenbeck(1.0);

}  // namespace

TEST_CASE("cross-window integral pins sigma^2 / 2 at tau = 0") {
  for (int j : {0, 2}) {
    const double g0 = std::abs(cross_window_integral(morse, ou, j, j, 0.0));
    CHECK(g0 == doctest::Approx(0.5 * sigma_j_squared(morse, ou, j))
                    .epsilon(1e-7));
  }
  // |G| is even in tau.
  const double plus = std::abs(cross_window_integral(morse, ou, 0, 0, 1.3));
  const double minus = std::abs(cross_window_integral(morse, ou, 0, 0, -1.3));
  CHECK(plus == doctest::Approx(minus).epsilon(1e-9));
  // It decays.
  CHECK(std::abs(cross_window_integral(morse, ou, 0, 0, 50.0)) <
        0.01 * std::abs(cross_window_integral(morse, ou, 0, 0, 0.0)));
}

TEST_CASE("covariance series reproduces the closed-form variances") {
  const double sig_sq = sigma_j_squared(morse, ou, 0);
  // Square modulus: Var(|W|^2) = 4 sigma^4, finite chaos at K = 2.
  const double v2 =
      u_cross_covariance(morse, ou, nonlinearity::power(2.0), 0, 0, 0.0, 2);
  CHECK(v2 == doctest::Approx(4.0 * sig_sq * sig_sq).epsilon(1e-7));
  // Modulus: Var(|W|) = sigma^2 (2 - pi/2).
  const double v1 =
      u_cross_covariance(morse, ou, nonlinearity::power(1.0), 0, 0, 0.0, 40);
  CHECK(v1 == doctest::Approx(sig_sq * (2.0 - M_PI / 2.0)).epsilon(1e-4));
}

namespace {

// Independent oracle: E[A(|Z1|) A(|Z2|)] - E[A]^2 for unit-component complex
// Gaussians with envelope correlation rho, via the bivariate Rayleigh
// density (modified-Bessel kernel).
double bivariate_rayleigh_cov(const nonlinearity& a, double sigma,
                              double rho) {
  const double q = 1.0 - rho * rho;
  auto inner = [&](double r1) {
    return integrate(
        [&](double r2) {
          const double bess_arg = rho * r1 * r2 / q;
          const double density =
              r1 * r2 / q * std::exp(-(r1 * r1 + r2 * r2) / (2.0 * q)) *
              std::cyl_bessel_i(0.0, bess_arg);
          return a.apply(sigma * r1) * a.apply(sigma * r2) * density;
        },
        1e-8, 9.0, 1e-9);
  };
  const double second = integrate(inner, 1e-8, 9.0, 1e-8);
  const double mean = integrate(
      [&](double r) {
        return a.apply(sigma * r) * r * std::exp(-r * r / 2.0);
      },
      1e-8, 9.0, 1e-10);
  return second - mean * mean;
}

}  // namespace

TEST_CASE("covariance series matches bivariate-Gaussian quadrature") {
  const double tau = 0.7;
  const double sig = std::sqrt(sigma_j_squared(morse, ou, 0));
  const double g = std::abs(cross_window_integral(morse, ou, 0, 0, tau));
  const double rho = 2.0 * g / (sig * sig);
  REQUIRE(rho > 0.05);  // non-trivial correlation at this lag
  REQUIRE(rho < 0.999);
  for (auto a : {nonlinearity::power(1.0), nonlinearity::power(2.0)}) {
    const int K = a.finite_chaos() ? 2 : 40;
    const double series = u_cross_covariance(morse, ou, a, 0, 0, tau, K);
    const double oracle = bivariate_rayleigh_cov(a, sig, rho);
    CHECK(series == doctest::Approx(oracle).epsilon(1e-4));
  }
}

TEST_CASE("covariance series rejects long-memory configurations") {
  // 2 alpha + beta < 1: the series integrand has no integrable decay.
  const analytic_wavelet thin{0.2, 1.0};
  const auto lrd = spectral_model::power_law(0.3, 1.0);
  CHECK_THROWS_AS(
      u_cross_covariance(thin, lrd, nonlinearity::power(1.0), 0, 0, 0.0, 4),
      std::domain_error);
  CHECK_THROWS_AS(u_cross_covariance(morse, ou, nonlinearity::power(1.0), 0,
                                     0, 0.0, 3),
                  std::invalid_argument);
}

TEST_CASE("limit covariance assembly") {
  const low_pass lp{low_pass::family::gaussian};
  const kappa_matrix km = build_kappa_matrix(
      morse, ou, nonlinearity::power(2.0), {0, 2}, {0.0, 1.0}, lp, 2);
  REQUIRE(km.kappa.size() == 2);
  CHECK(km.kappa[0][1] == doctest::Approx(km.kappa[1][0]));
  CHECK(km.kappa[0][0] > 0.0);
  CHECK(km.kappa[1][1] > 0.0);
  // Diagonal entries carry the zero-offset closed-form phi factor.
  CHECK(km.limit_cov[0][0] ==
        doctest::Approx(km.kappa[0][0] * M_PI * std::sqrt(2.0 * M_PI)));
  // Off-diagonal carries the phase-weighted factor at delta = t_0 - t_1.
  CHECK(km.limit_cov[0][1] ==
        doctest::Approx(km.kappa[0][1] * lp.phase_weighted_l2(1.0)));
  // kappa as a direct quadrature of the covariance function in tau.
  const double direct =
      integrate(
          [&](double tau) {
            return u_cross_covariance(morse, ou, nonlinearity::power(2.0), 0,
                                      0, tau, 2);
          },
          0.0, km.tau_max, 1e-8) /
      M_PI;
  CHECK(km.kappa[0][0] == doctest::Approx(direct).epsilon(1e-3));
}

TEST_CASE("distance lower bounds") {
  // Square modulus, sigma 1 vs 2: 2 Gamma(2) |1 - 4| = 6.
  CHECK(wasserstein_lower_bound(nonlinearity::power(2.0), 1.0, 2.0) ==
        doctest::Approx(6.0));
  CHECK(wasserstein_lower_bound(nonlinearity::log(), 1.0, 2.0) ==
        doctest::Approx(std::log(2.0)));
  CHECK(wasserstein_lower_bound(nonlinearity::power(1.0), 1.0, 1.0) == 0.0);
  CHECK_THROWS_AS(wasserstein_lower_bound(nonlinearity::log(), 0.0, 1.0),
                  std::domain_error);
}

TEST_CASE("truncation schedule and rate envelopes") {
  CHECK(truncation_schedule(40) == 12);
  CHECK(truncation_schedule(4) == 0);
  CHECK(truncation_schedule(8) == 2);
  CHECK(truncation_schedule(16) == 4);

  const std::vector<int> J{4, 6, 8, 10};
  const rate_curve exp_curve =
      smooth_wasserstein_rate(nonlinearity::power(2.0), J, 0.1);
  CHECK(exp_curve.regime == rate_regime::exponential);
  for (std::size_t i = 0; i < J.size(); ++i)
    CHECK(exp_curve.points[i].envelope ==
          doctest::Approx(std::pow(2.0, -J[i] / 2.0)));

  const rate_curve poly =
      smooth_wasserstein_rate(nonlinearity::power(1.0), J, 0.1);
  CHECK(poly.regime == rate_regime::polynomial_power);
  CHECK(poly.points[3].envelope ==
        doctest::Approx(std::pow(10.0, -(0.5 + 0.25 - 0.1))));

  const rate_curve logc = smooth_wasserstein_rate(nonlinearity::log(), J, 0.1);
  CHECK(logc.regime == rate_regime::polynomial_log);
  CHECK(logc.points[0].envelope == doctest::Approx(std::pow(4.0, -0.25)));

  const rate_curve kol = kolmogorov_rate(nonlinearity::power(2.0), J, 0.1);
  for (std::size_t i = 0; i < J.size(); ++i)
    CHECK(kol.points[i].envelope ==
          doctest::Approx(std::pow(2.0, -J[i] / 6.0)));

  // Envelopes decrease along the ladder in every regime.
  for (const auto& curve : {exp_curve, poly, logc, kol})
    for (std::size_t i = 1; i < curve.points.size(); ++i)
      CHECK(curve.points[i].envelope < curve.points[i - 1].envelope);
}

TEST_CASE("Kolmogorov conversion from the smooth bound") {
  // d = 1, min variance 1, s = 1e-3:
  // 3 * 2^{2/3} * s^{1/3} + s.
  const double expected =
      3.0 * std::pow(2.0, 2.0 / 3.0) * std::cbrt(1e-3) + 1e-3;
  CHECK(kolmogorov_combiner(1, 1.0, 1e-3) == doctest::Approx(expected));
  CHECK(expected == doctest::Approx(0.47722).epsilon(1e-3));
  CHECK_THROWS_AS(kolmogorov_combiner(0, 1.0, 1e-3), std::domain_error);
}

TEST_CASE("long-memory slope recovers the spectral exponent gap") {
  const double b1 = 0.4, b2 = 0.8;
  const auto m1 =
      spectral_model::power_law(b1, 1.0, profile_kind::rational_decay, 1.0);
  const auto m2 =
      spectral_model::power_law(b2, 1.0, profile_kind::rational_decay, 1.0);
  const int j = 20;
  const auto a = nonlinearity::log();
  const double bound_j = wasserstein_lower_bound(
      a, sigma_j(morse, m1, j), sigma_j(morse, m2, j));
  const double bound_jm1 = wasserstein_lower_bound(
      a, sigma_j(morse, m1, j - 1), sigma_j(morse, m2, j - 1));
  // Per-octave increment of the log-sigma gap -> |b1 - b2| ln 2 / 2, so the
  // finite-difference slope estimator is 2 (bound(j) - bound(j-1)) / ln 2.
  const double estimate = 2.0 * (bound_j - bound_jm1) / std::log(2.0);
  CHECK(estimate == doctest::Approx(std::fabs(b1 - b2)).epsilon(0.05));
}

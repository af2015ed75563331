#include <doctest.h>

#include <cmath>

#include "wavechaos/quadrature.hpp"
#include "wavechaos/wavelets.hpp"

using namespace wavechaos;

TEST_CASE("Morse spectrum shape and peak") {
  const analytic_wavelet w{3.0, 1.0};
  CHECK(w.peak_frequency() == doctest::Approx(3.0));
  CHECK(psi_hat(w, 3.0).real() == doctest::Approx(27.0 * std::exp(-3.0)));
  CHECK(psi_hat(w, -1.0) == std::complex<double>{0.0, 0.0});
  CHECK(psi_hat(w, 0.0) == std::complex<double>{0.0, 0.0});
  const analytic_wavelet g{2.0, 2.0};
  CHECK(g.peak_frequency() == doctest::Approx(1.0));
  CHECK_THROWS_AS(analytic_wavelet(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("Hermitian mirror and Hilbert pairing") {
  const analytic_wavelet w{3.0, 1.0};
  CHECK(psi_r_hat(w, 2.0).real() ==
        doctest::Approx(0.5 * psi_hat(w, 2.0).real()));
  CHECK(psi_r_hat(w, -2.0).real() ==
        doctest::Approx(psi_r_hat(w, 2.0).real()));
  // psi_i_hat = -i sgn(lambda) psi_r_hat: odd imaginary structure.
  CHECK(psi_i_hat(w, 2.0).imag() ==
        doctest::Approx(-psi_r_hat(w, 2.0).real()));
  CHECK(psi_i_hat(w, -2.0).imag() ==
        doctest::Approx(psi_r_hat(w, 2.0).real()));
  CHECK(psi_r_hat_sq(w, 2.0) ==
        doctest::Approx(std::norm(psi_r_hat(w, 2.0))));
}

TEST_CASE("low-pass transforms match numeric Fourier integrals") {
  for (auto kind : {low_pass::family::gaussian, low_pass::family::laplace,
                    low_pass::family::cauchy}) {
    const low_pass lp{kind};
    if (kind == low_pass::family::cauchy) {
      // phi has 1/t^2 tails, so verify the pair in the inverse direction
      // where the integrand decays exponentially.
      for (double t : {0.0, 0.7, 2.0}) {
        const double numeric = integrate_to_infinity(
            [&](double l) {
              return lp.phi_hat(l) * std::cos(l * t) / M_PI;
            },
            0.0, 1e-12);
        CHECK(lp.phi(t) == doctest::Approx(numeric).epsilon(1e-7));
      }
    } else {
      for (double lambda : {0.0, 0.7, 2.0}) {
        const double numeric = integrate(
            [&](double t) { return lp.phi(t) * std::cos(lambda * t); }, -60.0,
            60.0, 1e-12);
        CHECK(lp.phi_hat(lambda) == doctest::Approx(numeric).epsilon(1e-7));
      }
    }
    const double l2 = integrate_to_infinity(
        [&](double l) { return 2.0 * lp.phi_hat(l) * lp.phi_hat(l); }, 0.0,
        1e-10);
    CHECK(lp.phi_hat_l2_sq() == doctest::Approx(l2).epsilon(1e-7));
    const double phase = integrate_to_infinity(
        [&](double l) {
          return 2.0 * std::cos(1.3 * l) * lp.phi_hat(l) * lp.phi_hat(l);
        },
        0.0, 1e-10);
    CHECK(lp.phase_weighted_l2(1.3) == doctest::Approx(phase).epsilon(1e-6));
    CHECK(lp.phase_weighted_l2(0.0) ==
          doctest::Approx(lp.phi_hat_l2_sq()).epsilon(1e-12));
  }
}

namespace {

// Independent oracle: flat trapezoid at a million nodes, no adaptivity.
double sigma_sq_trapezoid(const analytic_wavelet& w, const spectral_model& m,
                          int j, double lambda_max) {
  const std::size_t n = 1000000;
  const double h = lambda_max / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double l = static_cast<double>(i) * h;
    acc += 2.0 * psi_r_hat_sq(w, std::ldexp(l, j)) * m.density(l);
  }
  // Endpoints: integrand vanishes at 0 (for 2 alpha + beta > 1) and decays
  // exponentially at the cutoff.
  return acc * h;
}

}  // namespace

TEST_CASE("per-scale variance agrees with the brute-force trapezoid") {
  const analytic_wavelet w{3.0, 1.0};
  const auto ou = spectral_model::ornstein_uhlenbeck(1.0);
  for (int j : {-1, 0, 2}) {
    const double cutoff = 60.0 / std::ldexp(1.0, j);
    CHECK(sigma_j_squared(w, ou, j) ==
          doctest::Approx(sigma_sq_trapezoid(w, ou, j, cutoff))
              .epsilon(1e-6));
  }
  const auto pl = spectral_model::power_law(0.5, 1.0);
  const analytic_wavelet m11{1.0, 1.0};
  for (int j : {0, 2}) {
    const double cutoff = 60.0 / std::ldexp(1.0, j);
    CHECK(sigma_j_squared(m11, pl, j) ==
          doctest::Approx(sigma_sq_trapezoid(m11, pl, j, cutoff))
              .epsilon(1e-5));
  }
}

TEST_CASE("power-law variance scales like 2^{-beta j} at coarse scales") {
  const analytic_wavelet w{3.0, 1.0};
  const double beta = 0.5;
  const auto pl =
      spectral_model::power_law(beta, 1.0, profile_kind::rational_decay, 1.0);
  const double r1 = sigma_j_squared(w, pl, 9) / sigma_j_squared(w, pl, 8);
  const double r2 = sigma_j_squared(w, pl, 12) / sigma_j_squared(w, pl, 11);
  CHECK(r2 == doctest::Approx(std::pow(2.0, -beta)).epsilon(1e-3));
  // Convergence: the coarser ratio is closer to the limit.
  CHECK(std::fabs(r2 - std::pow(2.0, -beta)) <=
        std::fabs(r1 - std::pow(2.0, -beta)) + 1e-12);
}

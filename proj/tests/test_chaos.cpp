#include <doctest.h>

#include <cmath>

#include "wavechaos/chaos.hpp"

using namespace wavechaos;

TEST_CASE("printed coefficient values are reproduced exactly") {
  const auto p2 = nonlinearity::power(2.0);
  CHECK(laguerre_coefficient(p2, 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(laguerre_coefficient(p2, 1) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(laguerre_coefficient(p2, 2) == 0.0);
  CHECK(laguerre_coefficient(p2, 3) == 0.0);

  const auto lg = nonlinearity::log();
  const double euler_mascheroni = 0.57721566490153286061;
  CHECK(laguerre_coefficient(lg, 0) ==
        doctest::Approx((std::log(2.0) - euler_mascheroni) / 2.0)
            .epsilon(1e-15));
  CHECK(laguerre_coefficient(lg, 1) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(laguerre_coefficient(lg, 2) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(laguerre_coefficient(lg, 5) == doctest::Approx(-0.1).epsilon(1e-15));
}

TEST_CASE("closed forms agree with Gauss-Laguerre quadrature") {
  const std::vector<nonlinearity> cases = {
      nonlinearity::power(0.5), nonlinearity::power(1.0),
      nonlinearity::power(2.0), nonlinearity::power(3.0),
      nonlinearity::log()};
  for (const auto& a : cases)
    for (int k = 0; k <= 20; ++k) {
      CAPTURE(k);
      CHECK(std::fabs(laguerre_coefficient(a, k) -
                      laguerre_coefficient_quadrature(a, k)) <= 1e-8);
    }
}

TEST_CASE("Hermite weights and bivariate coefficients") {
  CHECK(hermite_weight(0) == doctest::Approx(1.0));
  // h_2 = -sqrt(2)/2, h_4 = sqrt(24)/8.
  CHECK(hermite_weight(2) == doctest::Approx(-std::sqrt(2.0) / 2.0));
  CHECK(hermite_weight(4) == doctest::Approx(std::sqrt(24.0) / 8.0));
  const auto p2 = nonlinearity::power(2.0);
  // C_{m,n} = h_m h_n c_{A,(m+n)/2}; odd indices vanish.
  CHECK(hermite_coefficient(p2, 1, 1) == 0.0);
  CHECK(hermite_coefficient(p2, 2, 0) ==
        doctest::Approx(hermite_weight(2) * laguerre_coefficient(p2, 1)));
  CHECK(hermite_coefficient(p2, 2, 2) ==
        doctest::Approx(hermite_weight(2) * hermite_weight(2) *
                        laguerre_coefficient(p2, 2)));
}

TEST_CASE("chaos coefficients and the stable ell! c_ell^2 evaluator") {
  const auto p2 = nonlinearity::power(2.0);
  // c_2 = (-2) * 1! / 2! * c_{A,1} = (-1) * (-2) = 2.
  CHECK(chaos_coefficient(p2, 2) == doctest::Approx(2.0));
  const auto p1 = nonlinearity::power(1.0);
  for (int ell : {2, 4, 6, 10}) {
    const double c = chaos_coefficient(p1, ell);
    double factorial = 1.0;
    for (int i = 2; i <= ell; ++i) factorial *= i;
    CHECK(ell_factorial_c_ell_sq(p1, ell) ==
          doctest::Approx(factorial * c * c).epsilon(1e-10));
  }
}

TEST_CASE("sign-permutation identity: three evaluators, exact rationals") {
  for (int ell : {2, 4, 6}) {
    for (int neg = 0; neg <= ell; ++neg) {
      std::vector<int> signs(static_cast<std::size_t>(ell), 1);
      for (int i = 0; i < neg; ++i) signs[static_cast<std::size_t>(i)] = -1;
      const rational brute = b_bruteforce(ell, signs);
      const rational hyper = b_hypergeometric(ell, neg);
      const rational closed = b_closed_form(ell, neg);
      CAPTURE(ell);
      CAPTURE(neg);
      CHECK(brute == hyper);
      CHECK(hyper == closed);
    }
  }
  // Spot closed-form values.
  CHECK(b_closed_form(2, 1) == rational(2, 1));
  CHECK(b_closed_form(4, 2) == rational(16 * 2, 24));
  CHECK(b_closed_form(4, 1) == rational(0, 1));
}

TEST_CASE("the permutation sum only depends on the number of negatives") {
  // Same multiset of signs in different positions: identical value.
  const rational reference = b_bruteforce(4, {-1, -1, 1, 1});
  CHECK(b_bruteforce(4, {1, -1, 1, -1}) == reference);
  CHECK(b_bruteforce(4, {1, 1, -1, -1}) == reference);
  const rational ref6 = b_bruteforce(6, {-1, 1, 1, 1, 1, -1});
  CHECK(b_bruteforce(6, {1, -1, -1, 1, 1, 1}) == ref6);
}

TEST_CASE("theta sequences") {
  CHECK(theta1(1) == 0.0);
  CHECK(theta1(2) == doctest::Approx(std::sqrt(2.0)));
  for (int ell = 10; ell <= 40; ++ell) {
    const double ratio = theta1(ell + 1) / theta1(ell);
    CAPTURE(ell);
    CHECK(ratio > 2.5);
    CHECK(ratio <= 3.0);
  }
  // Geometric growth envelope: per-step ratio never exceeds 3, so the
  // sequence stays below 3^ell for the whole range the bounds use.
  for (int ell = 2; ell <= 40; ell += 2)
    CHECK(theta1(ell) <= std::pow(3.0, ell));
  CHECK(theta2(2, 2) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(theta2(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("central-coefficient Stirling envelope") {
  // 2^ell ((ell/2)!)^2 / ell! <= sqrt(2 pi ell) for even ell <= 40.
  for (int ell = 2; ell <= 40; ell += 2) {
    double log_v = ell * std::log(2.0) + 2.0 * std::lgamma(ell / 2 + 1.0) -
                   std::lgamma(ell + 1.0);
    CHECK(std::exp(log_v) <= std::sqrt(2.0 * M_PI * ell));
  }
}

TEST_CASE("chaos table: tail certification and truncation warning") {
  const auto p2 = nonlinearity::power(2.0);
  const chaos_table finite = build_chaos_table(p2, 2);
  CHECK(finite.tail_sq == 0.0);
  CHECK_FALSE(finite.truncation_warning);
  const chaos_table truncated = build_chaos_table(nonlinearity::power(4.0), 2);
  CHECK(truncated.truncation_warning);

  const auto p1 = nonlinearity::power(1.0);
  const chaos_table t20 = build_chaos_table(p1, 20);
  const chaos_table t40 = build_chaos_table(p1, 40);
  // The tail shrinks as K grows and dominates the dropped partial sums.
  CHECK(t40.tail_sq < t20.tail_sq);
  double dropped = 0.0;
  for (int ell = 22; ell <= 40; ell += 2)
    dropped += ell_factorial_c_ell_sq(p1, ell);
  CHECK(t20.tail_sq >= dropped);
  CHECK(t20.tail_sq == doctest::Approx(dropped + t40.tail_sq).epsilon(1e-6));
}

TEST_CASE("nonlinearity parsing and application") {
  const auto p = nonlinearity_from_string("power:1.5");
  CHECK(p.nu == doctest::Approx(1.5));
  CHECK(p.apply(2.0) == doctest::Approx(std::pow(2.0, 1.5)));
  const auto l = nonlinearity_from_string("log");
  CHECK(l.apply(std::exp(1.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(nonlinearity_from_string("cubic"), std::invalid_argument);
  CHECK_THROWS_AS(nonlinearity::power(-1.0), std::invalid_argument);
  CHECK(nonlinearity::power(2.0).finite_chaos());
  CHECK_FALSE(nonlinearity::power(1.0).finite_chaos());
  CHECK_FALSE(nonlinearity::log().finite_chaos());
}

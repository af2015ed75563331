#ifndef WAVECHAOS_CHAOS_HPP
#define WAVECHAOS_CHAOS_HPP

#include <string>
#include <vector>

#include "wavechaos/rational.hpp"

namespace wavechaos {

/// The pointwise nonlinearity A applied to |W[j]X|: either r^nu (nu > 0) or
/// ln r. Both satisfy the square-integrability hypothesis of the Laguerre
/// expansion.
struct nonlinearity {
  enum class family { power, log };

  family kind;
  double nu;  // only meaningful for power

  static nonlinearity power(double nu_) {
    if (nu_ <= 0.0) throw std::invalid_argument("power exponent must be > 0");
    return {family::power, nu_};
  }
  static nonlinearity log() { return {family::log, 0.0}; }

  /// nu is an even integer: the Laguerre coefficients vanish beyond nu/2 and
  /// the chaos expansion is finite.
  bool finite_chaos() const;

  double apply(double r) const;
};

nonlinearity nonlinearity_from_string(const std::string& s);
std::string to_string(const nonlinearity& a);

/// Laguerre polynomial L_k(u), three-term recurrence.
double laguerre_poly(int k, double u);

/// Closed-form Laguerre coefficient c_{A,k}:
///   Power(nu): 2^{nu/2} Gamma(nu/2+1) * binom(k - nu/2 - 1, k), where the
///   generalized binomial is the explicit falling-factorial product
///   (pole-safe for even integer nu).
///   Log: (ln 2 - gamma_EM)/2 at k = 0, and -1/(2k) for k >= 1.
double laguerre_coefficient(const nonlinearity& a, int k);

/// Gauss-Laguerre quadrature of int_0^inf A(sqrt(2u)) L_k(u) e^{-u} du.
/// Node count doubles until the result moves by < 1e-9; oracle for the
/// closed forms. Requires k <= 40.
double laguerre_coefficient_quadrature(const nonlinearity& a, int k);

/// h_m = (-1)^{m/2} sqrt(m!) / (2^{m/2} (m/2)!), m even.
double hermite_weight(int m);

/// C_{m,n} = h_m h_n c_{A,(m+n)/2} when both m, n even, else 0.
double hermite_coefficient(const nonlinearity& a, int m, int n);

/// c_ell = (-2)^{ell/2} (ell/2)! (ell!)^{-1} c_{A,ell/2}, ell even >= 2.
double chaos_coefficient(const nonlinearity& a, int ell);

/// Sign-permutation sum B(ell, lambda_{1:ell}) by full enumeration over the
/// ell! permutations and all even (m, n) splits. Exact rationals; ell <= 8.
rational b_bruteforce(int ell, const std::vector<int>& signs);

/// Same quantity via the a_n / w_n reformulation; n_negative is the count of
/// negative entries. Exact rationals, any even ell with 64-bit headroom.
rational b_hypergeometric(int ell, int n_negative);

/// Closed form: 2^ell (ell/2)! / ell! when n_negative = ell/2, else 0.
rational b_closed_form(int ell, int n_negative);

/// Theta_1(ell) = -1 + sum_{k=0}^{ell-1} C(ell-1,k) sqrt(C(2k,k)),
/// Theta_1(1) = 0. Extended-precision summation; ell <= 60.
double theta1(int ell);

/// Theta_2(ell, ell') cross term of the Stein bound expansion.
double theta2(int ell, int ell_prime);

/// Per-(A, K) coefficient table with tail and Stein series.
struct chaos_table {
  nonlinearity a;
  int truncation;                  // K, even
  std::vector<double> c_a;         // c_{A,k}, k = 0 .. K/2
  std::vector<double> c_ell;       // c_ell, ell = 2, 4, ..., K
  double tail_sq;                  // sum_{ell > K even} ell! c_ell^2
  double stein_series;             // sum_{ell <= K} |c_ell| sqrt(ell!) 3^{ell/2}
  bool truncation_warning;         // Power(nu in 2N) with K < nu
};

chaos_table build_chaos_table(const nonlinearity& a, int K);

/// ell! c_ell^2 = 2^ell ((ell/2)!)^2 / ell! * c_{A,ell/2}^2, evaluated
/// stably through log-gamma.
double ell_factorial_c_ell_sq(const nonlinearity& a, int ell);

/// |c_ell| sqrt(ell!) 3^{ell/2}, one term of the Stein series.
double stein_term(const nonlinearity& a, int ell);

}  // namespace wavechaos

#endif

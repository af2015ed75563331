#include "wavechaos/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wavechaos/quadrature.hpp"

namespace wavechaos {

namespace {

constexpr double euler_mascheroni = 0.57721566490153286061;

bool is_even_integer(double x) {
  const double r = std::round(x);
  return std::fabs(x - r) < 1e-12 && std::llround(r) % 2 == 0;
}

std::int64_t factorial64(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace

bool nonlinearity::finite_chaos() const {
  return kind == family::power && is_even_integer(nu);
}

double nonlinearity::apply(double r) const {
  if (kind == family::power) return std::pow(r, nu);
  return std::log(r);
}

nonlinearity nonlinearity_from_string(const std::string& s) {
  if (s == "log") return nonlinearity::log();
  if (s.rfind("power:", 0) == 0) {
    const double nu = std::stod(s.substr(6));
    return nonlinearity::power(nu);
  }
  throw std::invalid_argument("unknown nonlinearity '" + s +
                              "' (valid: power:<nu>, log)");
}

std::string to_string(const nonlinearity& a) {
  if (a.kind == nonlinearity::family::log) return "log";
  return "power:" + std::to_string(a.nu);
}

double laguerre_poly(int k, double u) {
  if (k < 0) throw std::domain_error("laguerre_poly: negative degree");
  if (k == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 - u;
  for (int i = 1; i < k; ++i) {
    const double next = ((2.0 * i + 1.0 - u) * l - i * lm1) / (i + 1.0);
    lm1 = l;
    l = next;
  }
  return l;
}

double laguerre_coefficient(const nonlinearity& a, int k) {
  if (k < 0) throw std::domain_error("laguerre_coefficient: negative index");
  if (a.kind == nonlinearity::family::log) {
    if (k == 0) return 0.5 * (std::log(2.0) - euler_mascheroni);
    return -1.0 / (2.0 * k);
  }
  const double nu = a.nu;
  const double front = std::pow(2.0, nu / 2.0) * std::tgamma(nu / 2.0 + 1.0);
  if (k == 0) return front;
  // binom(k - nu/2 - 1, k) as the falling-factorial product
  // (k - nu/2 - 1)(k - nu/2 - 2) ... (1 - nu/2)(-nu/2) / k!
  double prod = 1.0;
  for (int i = 1; i <= k; ++i) prod *= (static_cast<double>(k - i) - nu / 2.0);
  for (int i = 1; i <= k; ++i) prod /= static_cast<double>(i);
  return front * prod;
}

double laguerre_coefficient_quadrature(const nonlinearity& a, int k) {
  if (k > 40)
    throw std::domain_error(
        "laguerre_coefficient_quadrature: k > 40 is numerically unstable");
  // Adaptive quadrature in the radial variable: c_k = E[a(R) L_k(R^2/2)]
  // for R Rayleigh. It tolerates the integrable endpoint singularities of
  // a(r) = r^nu (nu < 1) and a(r) = log r, where a fixed Gauss-Laguerre rule
  // stalls. Beyond r = 15 the Gaussian factor kills every k <= 40 polynomial.
  const auto integrand = [&a, k](double r) {
    return a.apply(r) * laguerre_poly(k, 0.5 * r * r) * r *
           std::exp(-0.5 * r * r);
  };
  const double coarse = integrate(integrand, 0.0, 15.0, 1e-11, 1e-13);
  const double fine = integrate(integrand, 0.0, 15.0, 1e-12, 1e-14);
  if (std::fabs(fine - coarse) > 1e-9)
    throw numeric_error("Laguerre coefficient quadrature did not stabilize",
                        std::fabs(fine - coarse));
  return fine;
}

double hermite_weight(int m) {
  if (m < 0 || m % 2 != 0)
    throw std::domain_error("hermite_weight: m must be even and nonnegative");
  const int half = m / 2;
  const double sign = (half % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(0.5 * log_factorial(m) - 0.5 * m * std::log(2.0) -
                         log_factorial(half));
}

double hermite_coefficient(const nonlinearity& a, int m, int n) {
  if (m < 0 || n < 0 || m % 2 != 0 || n % 2 != 0) return 0.0;
  return hermite_weight(m) * hermite_weight(n) *
         laguerre_coefficient(a, (m + n) / 2);
}

double chaos_coefficient(const nonlinearity& a, int ell) {
  if (ell < 2 || ell % 2 != 0)
    throw std::domain_error("chaos_coefficient: ell must be even and >= 2");
  const int half = ell / 2;
  const double sign = (half % 2 == 0) ? 1.0 : -1.0;
  const double magnitude = std::exp(0.5 * ell * std::log(2.0) +
                                    log_factorial(half) - log_factorial(ell));
  return sign * magnitude * laguerre_coefficient(a, half);
}

rational b_bruteforce(int ell, const std::vector<int>& signs) {
  if (ell < 2 || ell % 2 != 0 || ell > 8)
    throw std::length_error("b_bruteforce requires even ell in {2,...,8}");
  if (static_cast<int>(signs.size()) != ell)
    throw std::invalid_argument("signs length must equal ell");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");

  std::vector<int> perm(ell);
  std::iota(perm.begin(), perm.end(), 0);
  rational total(0);
  do {
    for (int n = 0; n <= ell; n += 2) {
      const int m = ell - n;
      int sign_product = 1;
      for (int k = ell - n; k < ell; ++k) sign_product *= signs[perm[k]];
      const int half_n = n / 2;
      const std::int64_t weight_den =
          factorial64(m / 2) * factorial64(half_n);
      rational term(sign_product * ((half_n % 2 == 0) ? 1 : -1), weight_den);
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / rational(factorial64(ell));
}

rational b_hypergeometric(int ell, int n_negative) {
  if (ell < 2 || ell % 2 != 0)
    throw std::invalid_argument("ell must be even and >= 2");
  if (n_negative < 0 || n_negative > ell)
    throw std::invalid_argument("n_negative out of range");
  auto binom = [](int n, int k) -> std::int64_t {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  };
  const int N = n_negative;
  rational total(0);
  for (int n = 0; n <= ell; n += 2) {
    // a_n = sum_q (-1)^q C(N, q) C(ell - N, n - q)
    std::int64_t a_n = 0;
    for (int q = 0; q <= n; ++q) {
      const std::int64_t t = binom(N, q) * binom(ell - N, n - q);
      a_n += (q % 2 == 0) ? t : -t;
    }
    // w_n = (1/ell!) n! (ell-n)! / ((n/2)! (ell/2 - n/2)!) (-1)^{n/2}
    const int half_n = n / 2;
    rational w(factorial64(n) * factorial64(ell - n),
               factorial64(ell) * factorial64(half_n) *
                   factorial64(ell / 2 - half_n));
    if (half_n % 2 != 0) w = rational(0) - w;
    total += w * rational(a_n);
  }
  return total;
}

rational b_closed_form(int ell, int n_negative) {
  if (n_negative != ell / 2) return rational(0);
  return rational((std::int64_t{1} << ell) * factorial64(ell / 2),
                  factorial64(ell));
}

double theta1(int ell) {
  if (ell < 1) throw std::domain_error("theta1: ell must be >= 1");
  if (ell > 60) throw std::length_error("theta1: ell > 60 overflows");
  if (ell == 1) return 0.0;
  long double sum = -1.0L;
  for (int k = 0; k <= ell - 1; ++k) {
    const long double log_term =
        static_cast<long double>(log_binomial(ell - 1, k)) +
        0.5L * static_cast<long double>(log_binomial(2 * k, k));
    sum += std::exp(log_term);
  }
  return static_cast<double>(sum);
}

double theta2(int ell, int ell_prime) {
  if (ell < 1 || ell_prime < 1)
    throw std::domain_error("theta2: arguments must be >= 1");
  if (ell > 60 || ell_prime > 60)
    throw std::length_error("theta2: arguments > 60 overflow");
  long double sum = 0.0L;
  const int r_max = std::min(ell, ell_prime);
  for (int r = 1; r <= r_max; ++r) {
    const long double log_term =
        0.5L * (log_factorial(ell) - log_factorial(ell - r) -
                log_factorial(r)) +
        0.5L * (log_factorial(ell_prime) - log_factorial(ell_prime - r) -
                log_factorial(r)) +
        0.5L * log_factorial(ell + ell_prime - 2 * r) -
        0.5L * log_factorial(ell - r) - 0.5L * log_factorial(ell_prime - r);
    sum += static_cast<long double>(r) / ell_prime * std::exp(log_term);
  }
  return static_cast<double>(sum);
}

double ell_factorial_c_ell_sq(const nonlinearity& a, int ell) {
  const double c_a = laguerre_coefficient(a, ell / 2);
  if (c_a == 0.0) return 0.0;
  const double log_factor = ell * std::log(2.0) +
                            2.0 * log_factorial(ell / 2) - log_factorial(ell);
  return std::exp(log_factor) * c_a * c_a;
}

double stein_term(const nonlinearity& a, int ell) {
  const double c_a = laguerre_coefficient(a, ell / 2);
  if (c_a == 0.0) return 0.0;
  // |c_ell| sqrt(ell!) = 2^{ell/2} (ell/2)! / sqrt(ell!) * |c_a|
  const double log_factor = 0.5 * ell * std::log(2.0) +
                            log_factorial(ell / 2) -
                            0.5 * log_factorial(ell) +
                            0.5 * ell * std::log(3.0);
  return std::exp(log_factor) * std::fabs(c_a);
}

chaos_table build_chaos_table(const nonlinearity& a, int K) {
  if (K < 2 || K % 2 != 0 || K > 200)
    throw std::invalid_argument("chaos table needs even K in [2, 200]");
  chaos_table table;
  table.a = a;
  table.truncation = K;
  table.truncation_warning =
      a.finite_chaos() && K < static_cast<int>(std::llround(a.nu));
  for (int k = 0; k <= K / 2; ++k)
    table.c_a.push_back(laguerre_coefficient(a, k));
  for (int ell = 2; ell <= K; ell += 2)
    table.c_ell.push_back(chaos_coefficient(a, ell));

  // Tail: relative stop at 1e-16 of the partial sum, capped at 1e6 terms.
  double tail = 0.0;
  if (!a.finite_chaos() || K < a.nu) {
    // Ratio recurrence keeps c_{A,k} stable at large k:
    // c_{A,k+1} / c_{A,k} = (k - nu/2) / (k + 1)  [power case].
    const int k0 = K / 2 + 1;
    double c_a_k = laguerre_coefficient(a, k0);
    for (long n = 0; n < 1000000; ++n) {
      const int k = k0 + static_cast<int>(n);
      const int ell = 2 * k;
      double c = c_a_k;
      if (a.kind == nonlinearity::family::log) c = -1.0 / ell;
      const double log_factor = ell * std::log(2.0) +
                                2.0 * log_factorial(k) - log_factorial(ell);
      const double term = std::exp(log_factor) * c * c;
      tail += term;
      if (term < 1e-16 * tail && tail > 0.0) break;
      if (a.kind == nonlinearity::family::power)
        c_a_k *= (static_cast<double>(k) - a.nu / 2.0) / (k + 1.0);
    }
  }
  table.tail_sq = tail;

  double stein = 0.0;
  for (int ell = 2; ell <= K; ell += 2) stein += stein_term(a, ell);
  table.stein_series = stein;
  return table;
}

}  // namespace wavechaos

#include "wavechaos/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace wavechaos {

namespace {

// G7/K15 nodes and weights on [-1, 1] (positive half; symmetric rule).
constexpr double kronrod_nodes[8] = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144838258730,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
constexpr double kronrod_weights[8] = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
constexpr double gauss_weights[4] = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

struct panel_result {
  double value;
  double error;
};

panel_result gk15(const real_fn& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double fv[15];
  fv[7] = f(c);
  for (int i = 1; i < 8; ++i) {
    fv[7 - i] = f(c - h * kronrod_nodes[i]);
    fv[7 + i] = f(c + h * kronrod_nodes[i]);
  }
  double kronrod = kronrod_weights[0] * fv[7];
  for (int i = 1; i < 8; ++i)
    kronrod += kronrod_weights[i] * (fv[7 - i] + fv[7 + i]);
  double gauss = gauss_weights[0] * fv[7];
  // Gauss points sit at the even Kronrod nodes 2, 4, 6.
  for (int i = 1; i < 4; ++i)
    gauss += gauss_weights[i] * (fv[7 - 2 * i] + fv[7 + 2 * i]);
  kronrod *= h;
  gauss *= h;
  const double diff = std::fabs(kronrod - gauss);
  return {kronrod, std::pow(200.0 * diff, 1.5)};
}

double adaptive(const real_fn& f, double a, double b, double rel_tol,
                double abs_tol, int depth, double whole_estimate) {
  panel_result r = gk15(f, a, b);
  const double tol =
      std::max(abs_tol, rel_tol * std::max(std::fabs(whole_estimate),
                                           std::fabs(r.value)));
  if (r.error <= tol || depth <= 0) return r.value;
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, rel_tol, abs_tol * 0.5, depth - 1,
                  whole_estimate) +
         adaptive(f, mid, b, rel_tol, abs_tol * 0.5, depth - 1, whole_estimate);
}

}  // namespace

double integrate(const real_fn& f, double a, double b, double rel_tol,
                 double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  panel_result first = gk15(f, a, b);
  return adaptive(f, a, b, rel_tol, abs_tol, max_depth, first.value);
}

double integrate_to_infinity(const real_fn& f, double a, double rel_tol,
                             double tail_rel) {
  constexpr double lambda_cap = 1e6;
  double lo = a;
  double width = std::max(1.0, std::fabs(a));
  double total = 0.0;
  double last_panel = 0.0;
  while (lo < lambda_cap) {
    const double hi = std::min(lo + width, lambda_cap);
    last_panel = integrate(f, lo, hi, rel_tol, 1e-300);
    total += last_panel;
    lo = hi;
    width *= 2.0;
    if (std::fabs(last_panel) < tail_rel * std::fabs(total) &&
        std::fabs(total) > 0.0)
      return total;
  }
  // Slow (power-like) decay: fold the remaining tail through u = 1/lambda,
  // int_L^inf f(x) dx = int_0^{1/L} f(1/u) / u^2 du.
  const double tail = integrate(
      [&f](double u) { return f(1.0 / u) / (u * u); }, 0.0, 1.0 / lo, rel_tol,
      1e-300);
  if (!std::isfinite(tail) || std::fabs(tail) > std::fabs(total))
    throw numeric_error("improper integral: tail not converged at cutoff 1e6",
                        std::fabs(tail));
  return total + tail;
}

double integrate_power_singularity(const real_fn& g, double p, double b,
                                   double rel_tol) {
  if (p <= 0.0 || p > 1.0)
    throw std::invalid_argument("singularity exponent p must be in (0, 1]");
  if (b <= 0.0) return 0.0;
  // int_0^b lambda^{p-1} g(lambda) dlambda = (1/p) int_0^{b^p} g(u^{1/p}) du
  const double ub = std::pow(b, p);
  const double inv_p = 1.0 / p;
  return inv_p * integrate([&g, inv_p](double u) { return g(std::pow(u, inv_p)); },
                           0.0, ub, rel_tol);
}

double integrate_oscillatory(const real_fn& f, double omega, double a,
                             double b, bool use_sin, double rel_tol) {
  const double abs_omega = std::fabs(omega);
  auto integrand = [&](double t) {
    return f(t) * (use_sin ? std::sin(omega * t) : std::cos(omega * t));
  };
  if (abs_omega < 1e-12) return integrate(integrand, a, b, rel_tol);
  const double panel = M_PI / (4.0 * abs_omega);
  double total = 0.0;
  double lo = a;
  while (lo < b) {
    const double hi = std::min(lo + panel, b);
    total += integrate(integrand, lo, hi, rel_tol, 1e-300, 30);
    lo = hi;
  }
  return total;
}

gauss_laguerre_rule gauss_laguerre(std::size_t n) {
  // Newton iteration with the standard initial guesses (Stroud & Secrest).
  gauss_laguerre_rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  long double z = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0L / (1.0L + 2.4L * static_cast<long double>(n));
    } else if (i == 1) {
      z += 15.0L / (1.0L + 2.5L * static_cast<long double>(n));
    } else {
      const long double ai = static_cast<long double>(i - 1);
      z += (1.0L + 2.55L * ai) / (1.9L * ai) * (z - rule.nodes[i - 2]);
    }
    long double pp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p1 = 1.0L;
      long double p2 = 0.0L;
      for (std::size_t j = 0; j < n; ++j) {
        const long double p3 = p2;
        p2 = p1;
        const long double jj = static_cast<long double>(j);
        p1 = ((2.0L * jj + 1.0L - z) * p2 - jj * p3) / (jj + 1.0L);
      }
      pp = static_cast<long double>(n) * (p1 - p2) / z;
      const long double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(static_cast<double>(z - z1)) <= 1e-16 * std::fabs(static_cast<double>(z)))
        break;
    }
    rule.nodes[i] = static_cast<double>(z);
    // w_i = -1 / (n * L_n'(x_i) * L_{n-1}(x_i)); recompute L_{n-1} at the root.
    long double p1 = 1.0L;
    long double p2 = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const long double p3 = p2;
      p2 = p1;
      const long double jj = static_cast<long double>(j);
      p1 = ((2.0L * jj + 1.0L - z) * p2 - jj * p3) / (jj + 1.0L);
    }
    pp = static_cast<long double>(n) * (p1 - p2) / z;
    rule.weights[i] = static_cast<double>(-1.0L / (static_cast<long double>(n) * pp * p2));
  }
  return rule;
}

}  // namespace wavechaos

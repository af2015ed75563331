#ifndef WAVECHAOS_QUADRATURE_HPP
#define WAVECHAOS_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace wavechaos {

/// Thrown when a quadrature routine cannot reach its requested tolerance.
/// Carries the best available residual estimate.
class numeric_error : public std::runtime_error {
public:
  numeric_error(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

using real_fn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7/K15) integration over [a, b].
double integrate(const real_fn& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 1e-14, int max_depth = 50);

/// Integral over [a, inf): doubling panels until the running tail estimate
/// drops below tail_rel times the accumulated mass; any remaining tail past
/// lambda = 1e6 is folded in through the substitution u = 1/lambda.
double integrate_to_infinity(const real_fn& f, double a,
                             double rel_tol = 1e-10, double tail_rel = 1e-10);

/// Integral of lambda^{p-1} * g(lambda) over [0, b] with p in (0, 1]; the
/// substitution u = lambda^p removes the endpoint singularity.
double integrate_power_singularity(const real_fn& g, double p, double b,
                                   double rel_tol = 1e-10);

/// Integral of f * cos(omega t) resp. f * sin(omega t) over [a, b] using
/// panels of width at most pi / (4 |omega|).
double integrate_oscillatory(const real_fn& f, double omega, double a,
                             double b, bool use_sin, double rel_tol = 1e-9);

struct gauss_laguerre_rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights for the n-point Gauss-Laguerre rule (weight e^{-u}).
gauss_laguerre_rule gauss_laguerre(std::size_t n);

}  // namespace wavechaos

#endif

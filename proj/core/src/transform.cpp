#include "wavechaos/transform.hpp"

#include <cmath>
#include <limits>

namespace wavechaos {

time_series_real apply_nonlinearity(const nonlinearity& a,
                                    const std::vector<std::complex<double>>& w,
                                    double dt, std::size_t valid_begin,
                                    std::size_t valid_end) {
  time_series_real out;
  out.dt = dt;
  out.valid_begin = valid_begin;
  out.valid_end = valid_end;
  out.values.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double r = std::abs(w[i]);
    if (r == 0.0 && a.kind == nonlinearity::family::log) {
      out.values[i] = -std::numeric_limits<double>::infinity();
      ++out.invalid_samples;
      continue;
    }
    out.values[i] = a.apply(r);
  }
  return out;
}

double analytic_mean_u(const nonlinearity& a, double sigma) {
  if (sigma <= 0.0) throw std::domain_error("analytic_mean_u: sigma <= 0");
  const double c0 = laguerre_coefficient(a, 0);
  if (a.kind == nonlinearity::family::power)
    return std::pow(sigma, a.nu) * c0;
  return c0 + std::log(sigma);
}

double analytic_mean_s(const nonlinearity& a, double sigma,
                       const low_pass& lp) {
  return analytic_mean_u(a, sigma) * lp.phi_hat(0.0);
}

double rayleigh_moment(double nu, double sigma) {
  // E[|W|^nu] for W = X + iY, X, Y iid N(0, sigma^2):
  // (2 sigma^2)^{nu/2} Gamma(nu/2 + 1).
  return std::pow(2.0 * sigma * sigma, nu / 2.0) * std::tgamma(nu / 2.0 + 1.0);
}

double phi_support_halfwidth(const low_pass& lp, int J) {
  const double scale = std::ldexp(1.0, J);
  switch (lp.kind()) {
    case low_pass::family::gaussian:
      // e^{-u^2} = 1e-10
      return scale * std::sqrt(10.0 * std::log(10.0));
    case low_pass::family::laplace:
      return scale * 10.0 * std::log(10.0);
    case low_pass::family::cauchy:
      return scale * 1e5;
  }
  return 0.0;
}

std::vector<double> moving_average(const time_series_real& u,
                                   const low_pass& lp, int J,
                                   const std::vector<double>& t_eval) {
  if (u.valid_begin >= u.valid_end)
    throw std::invalid_argument("moving_average: empty valid region");
  const double dt = u.dt;
  const double halfwidth = phi_support_halfwidth(lp, J);
  const long half_steps = static_cast<long>(std::ceil(halfwidth / dt));

  std::vector<double> out;
  out.reserve(t_eval.size());
  for (double t : t_eval) {
    const long center = std::lround(t / dt);
    const long lo = center - half_steps;
    const long hi = center + half_steps;
    if (lo < static_cast<long>(u.valid_begin) ||
        hi >= static_cast<long>(u.valid_end)) {
      const long needed = 2 * (std::labs(center) + half_steps + 1) * 2;
      throw std::domain_error(
          "moving_average: evaluation at t = " + std::to_string(t) +
          " needs the filter support inside the valid region; requires a "
          "grid of at least " +
          std::to_string(needed) + " samples at this dt");
    }
    // Trapezoid at path resolution; endpoint values are ~1e-10 of the peak,
    // so the half weights matter only formally.
    double acc = 0.0;
    for (long s = lo; s <= hi; ++s) {
      const double weight = (s == lo || s == hi) ? 0.5 : 1.0;
      acc += weight * u.values[static_cast<std::size_t>(s)] *
             lp.phi_J(J, t - s * dt);
    }
    out.push_back(acc * dt);
  }
  return out;
}

f_sample make_f_sample(const path_bundle& bundle, const nonlinearity& a,
                       const low_pass& lp, int J,
                       const std::vector<f_coordinate>& coords,
                       const std::vector<double>& sigma_by_scale,
                       double time_origin) {
  if (coords.empty())
    throw std::invalid_argument("make_f_sample: empty coordinate list");
  if (coords.size() != sigma_by_scale.size())
    throw std::invalid_argument("make_f_sample: sigma list size mismatch");
  f_sample sample;
  sample.J = J;
  const double root = std::sqrt(std::ldexp(1.0, J));
  for (std::size_t m = 0; m < coords.size(); ++m) {
    const auto& coord = coords[m];
    auto it = bundle.w.find(coord.j);
    if (it == bundle.w.end())
      throw std::invalid_argument("make_f_sample: scale j = " +
                                  std::to_string(coord.j) +
                                  " missing from bundle");
    const time_series_real u = apply_nonlinearity(
        a, it->second, bundle.dt, bundle.valid_begin, bundle.valid_end);
    const double t_phys = time_origin + std::ldexp(coord.t, J);
    const double s_val = moving_average(u, lp, J, {t_phys})[0];
    const double mean = analytic_mean_s(a, sigma_by_scale[m], lp);
    sample.values.push_back(root * (s_val - mean));
  }
  return sample;
}

}  // namespace wavechaos

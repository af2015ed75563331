#ifndef WAVECHAOS_TRANSFORM_HPP
#define WAVECHAOS_TRANSFORM_HPP

#include <vector>

#include "wavechaos/chaos.hpp"
#include "wavechaos/gpsim.hpp"
#include "wavechaos/wavelets.hpp"

namespace wavechaos {

/// Real series on the path time grid with valid-region bounds.
struct time_series_real {
  std::vector<double> values;
  double dt = 0.0;
  std::size_t valid_begin = 0;
  std::size_t valid_end = 0;
  std::size_t invalid_samples = 0;  // Log applied to exact zeros
};

/// Pointwise A(|w|). Log maps exact zeros to -inf and counts them as invalid
/// (a probability-zero event; only float underflow triggers it).
time_series_real apply_nonlinearity(const nonlinearity& a,
                                    const std::vector<std::complex<double>>& w,
                                    double dt, std::size_t valid_begin,
                                    std::size_t valid_end);

/// E[U^A[j]X(t)]: sigma^nu c_{A,0} for Power, c_{A,0} + ln sigma for Log.
double analytic_mean_u(const nonlinearity& a, double sigma);

/// E[S^A_J[j]X(t)] = analytic_mean_u * phi_hat(0); independent of J and t.
double analytic_mean_s(const nonlinearity& a, double sigma,
                       const low_pass& lp);

/// Var(U) closed forms used as oracles: Power(2) -> 4 sigma^4,
/// Power(1) -> sigma^2 (2 - pi/2).
double rayleigh_moment(double nu, double sigma);

/// Trapezoid moving average (u * phi_J)(t) at the requested (unscaled time)
/// evaluation points. phi_J is truncated where |phi_J| < 1e-10 of its peak;
/// evaluation plus support must fit inside the valid region.
std::vector<double> moving_average(const time_series_real& u,
                                   const low_pass& lp, int J,
                                   const std::vector<double>& t_eval);

/// Half width (in time units) of the truncated phi_J support.
double phi_support_halfwidth(const low_pass& lp, int J);

/// One coordinate specification of the vector F.
struct f_coordinate {
  int j;
  double t;
};

struct f_sample {
  std::vector<double> values;  // F_1 .. F_d
  int J = 0;
};

/// F_m = 2^{J/2} { S^A_J[j_m]X(2^J t_m) - E[S^A_J[j_m]X] }, centered with the
/// analytic mean and scaled by 2^{J/2}. sigma_by_scale supplies sigma_{j_m}.
/// Evaluation happens at time_origin + 2^J t_m: by stationarity the law does
/// not depend on the origin, and an interior origin keeps the filter support
/// inside the valid region of the periodic synthesis.
f_sample make_f_sample(const path_bundle& bundle, const nonlinearity& a,
                       const low_pass& lp, int J,
                       const std::vector<f_coordinate>& coords,
                       const std::vector<double>& sigma_by_scale,
                       double time_origin = 0.0);

}  // namespace wavechaos

#endif

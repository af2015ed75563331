#include "wavechaos/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "wavechaos/parallel.hpp"
#include "wavechaos/quadrature.hpp"
#include "wavechaos/rng.hpp"

namespace wavechaos {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Wichura's PPND16 (algorithm AS 241): inverse standard normal CDF with
// near-machine accuracy on (0, 1).
double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
            3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
          4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
          2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    value =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
          5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) *
                  r + 1.84631831751005468180e-5) * r +
              7.86869131145613259100e-4) * r + 1.48753612908506148525e-2) * r +
            1.36929880922735805310e-1) * r + 5.99832206555887937690e-1) * r +
         1.0);
  }
  return q < 0.0 ? -value : value;
}

double bivariate_normal_cdf(double h, double k, double rho) {
  if (!(rho >= -1.0 && rho <= 1.0))
    throw std::domain_error("bivariate_normal_cdf: |rho| <= 1 required");
  if (rho >= 1.0 - 1e-14) return normal_cdf(std::min(h, k));
  if (rho <= -1.0 + 1e-14)
    return std::max(0.0, normal_cdf(h) + normal_cdf(k) - 1.0);
  // Phi2(h, k, rho) = Phi(h) Phi(k)
  //   + (1/2pi) int_0^{asin rho} exp(-(h^2 + k^2 - 2 h k sin t)
  //                                  / (2 cos^2 t)) dt.
  const double upper = std::asin(rho);
  const double base = normal_cdf(h) * normal_cdf(k);
  auto integrand = [&](double t) {
    const double s = std::sin(t);
    const double c2 = 1.0 - s * s;
    return std::exp(-(h * h + k * k - 2.0 * h * k * s) / (2.0 * c2));
  };
  const double lo = std::min(0.0, upper);
  const double hi = std::max(0.0, upper);
  double integral = integrate(integrand, lo, hi, 1e-11);
  if (upper < 0.0) integral = -integral;
  const double value = base + integral / (2.0 * M_PI);
  return std::min(1.0, std::max(0.0, value));
}

namespace {

void check_sample_args(const std::vector<double>& samples, double variance) {
  if (samples.size() < 2)
    throw std::invalid_argument("distance estimator needs >= 2 samples");
  if (!(variance > 0.0))
    throw std::domain_error("distance estimator: variance must be positive");
}

}  // namespace

double empirical_kolmogorov_1d(std::vector<double> samples, double mean,
                               double variance) {
  check_sample_args(samples, variance);
  std::sort(samples.begin(), samples.end());
  const double sd = std::sqrt(variance);
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = normal_cdf((samples[i] - mean) / sd);
    const double below = static_cast<double>(i) / n;      // F_hat(x_i^-)
    const double above = static_cast<double>(i + 1) / n;  // F_hat(x_i)
    sup = std::max(sup, std::max(above - cdf, cdf - below));
  }
  return sup;
}

double empirical_w1_1d(std::vector<double> samples, double mean,
                       double variance) {
  check_sample_args(samples, variance);
  std::sort(samples.begin(), samples.end());
  const double sd = std::sqrt(variance);
  const double n = static_cast<double>(samples.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double p = (static_cast<double>(i) + 0.5) / n;
    acc += std::fabs(samples[i] - (mean + sd * normal_quantile(p)));
  }
  return acc / n;
}

double empirical_kolmogorov_2d(
    const std::vector<std::array<double, 2>>& samples,
    const std::array<double, 2>& mean,
    const std::array<std::array<double, 2>, 2>& covariance, int grid_points) {
  if (samples.size() < 2)
    throw std::invalid_argument("distance estimator needs >= 2 samples");
  if (grid_points < 2)
    throw std::invalid_argument("grid_points must be >= 2");
  const double v1 = covariance[0][0];
  const double v2 = covariance[1][1];
  if (!(v1 > 0.0 && v2 > 0.0))
    throw std::domain_error("distance estimator: variance must be positive");
  const double sd1 = std::sqrt(v1);
  const double sd2 = std::sqrt(v2);
  double rho = covariance[0][1] / (sd1 * sd2);
  rho = std::min(1.0, std::max(-1.0, rho));

  // Product-quadrant grid at marginal Gaussian quantiles.
  const int g = grid_points;
  std::vector<double> z1(g), z2(g);
  for (int i = 0; i < g; ++i) {
    const double p = (i + 0.5) / g;
    z1[i] = mean[0] + sd1 * normal_quantile(p);
    z2[i] = mean[1] + sd2 * normal_quantile(p);
  }

  // Single sweep over x-sorted samples with a cumulative y-bucket histogram.
  std::vector<std::size_t> order(samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a][0] < samples[b][0];
  });
  // bucket[b] counts swept samples whose smallest covering y-threshold is
  // z2[b]; samples above every threshold land in the overflow slot g.
  std::vector<std::size_t> bucket(static_cast<std::size_t>(g) + 1, 0);
  std::vector<std::size_t> cum(g, 0);
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  std::size_t swept = 0;
  for (int ix = 0; ix < g; ++ix) {
    while (swept < order.size() && samples[order[swept]][0] <= z1[ix]) {
      const double y = samples[order[swept]][1];
      const auto it = std::lower_bound(z2.begin(), z2.end(), y);
      ++bucket[static_cast<std::size_t>(it - z2.begin())];
      ++swept;
    }
    std::size_t running = 0;
    for (int iy = 0; iy < g; ++iy) {
      running += bucket[static_cast<std::size_t>(iy)];
      cum[static_cast<std::size_t>(iy)] = running;
    }
    const double hs = (z1[ix] - mean[0]) / sd1;
    for (int iy = 0; iy < g; ++iy) {
      const double ks = (z2[iy] - mean[1]) / sd2;
      const double model_p = bivariate_normal_cdf(hs, ks, rho);
      const double emp_p = static_cast<double>(cum[static_cast<std::size_t>(
                               iy)]) / n;
      sup = std::max(sup, std::fabs(emp_p - model_p));
    }
  }
  return sup;
}

namespace {

struct grid_plan {
  grid_config config;
  double time_origin = 0.0;
};

// Automatic grid sizing for one J: dt from the finest wavelet scale, grid
// length from the low-pass support plus the requested evaluation offsets,
// everything anchored at the grid midpoint (valid by stationarity).
grid_plan plan_grid(const clt_run_config& cfg, int J) {
  grid_plan plan;
  int j_min = cfg.coords.front().j;
  double t_abs_max = 0.0;
  for (const auto& c : cfg.coords) {
    j_min = std::min(j_min, c.j);
    t_abs_max = std::max(t_abs_max, std::fabs(c.t));
  }
  double dt = cfg.dt > 0.0 ? cfg.dt
                           : std::min(0.125, std::ldexp(1.0, j_min) / 8.0);
  plan.config.dt = dt;

  const double halfwidth = phi_support_halfwidth(cfg.lp, J);
  const double reach = halfwidth + std::ldexp(t_abs_max, J);
  // The filter support around the midpoint must sit inside the central-half
  // valid region: total length >= 4 * reach, plus slack.
  const double needed_length =
      std::max(4.2 * reach + 16.0 * dt,
               static_cast<double>(std::ldexp(64.0, J)) * dt);
  std::size_t n_time = cfg.n_time > 0 ? cfg.n_time : 4096;
  while (static_cast<double>(n_time) * dt < needed_length) {
    n_time *= 2;
    if (n_time > (1u << 26))
      throw size_error(
          "clt grid: required time grid exceeds 2^26 samples; reduce J, "
          "shrink the low-pass support, or set dt explicitly");
  }
  plan.config.n_time = n_time;
  plan.time_origin = static_cast<double>(n_time / 2) * dt;
  return plan;
}

void validate(const clt_run_config& cfg) {
  std::vector<std::string> errors;
  if (cfg.coords.empty() || cfg.coords.size() > 2)
    errors.push_back("coords: d must be 1 or 2 (higher dimensions rejected)");
  if (cfg.J_list.empty()) errors.push_back("J_list: at least one J required");
  for (std::size_t i = 1; i < cfg.J_list.size(); ++i)
    if (cfg.J_list[i] <= cfg.J_list[i - 1]) {
      errors.push_back("J_list: must be strictly ascending");
      break;
    }
  for (int J : cfg.J_list)
    if (J < 0) errors.push_back("J_list: J must be >= 0");
  if (cfg.n_paths < 100)
    errors.push_back("n_paths: at least 100 paths required (0 is an error)");
  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "invalid experiment configuration:";
    for (const auto& e : errors) msg << "\n  - " << e;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

clt_report run_clt_experiment(const clt_run_config& cfg) {
  validate(cfg);
  const std::size_t d = cfg.coords.size();

  std::vector<int> j_set;
  std::vector<double> t_list;
  std::vector<double> sigma_by_scale;
  for (const auto& c : cfg.coords) {
    j_set.push_back(c.j);
    t_list.push_back(c.t);
    sigma_by_scale.push_back(sigma_j(cfg.w, cfg.model, c.j));
  }
  std::vector<int> distinct_j = j_set;
  std::sort(distinct_j.begin(), distinct_j.end());
  distinct_j.erase(std::unique(distinct_j.begin(), distinct_j.end()),
                   distinct_j.end());

  clt_report report;
  if (cfg.with_kappa) {
    try {
      const int K = cfg.a.finite_chaos()
                        ? static_cast<int>(std::lround(cfg.a.nu))
                        : 40;
      report.kappa = build_kappa_matrix(cfg.w, cfg.model, cfg.a, j_set,
                                        t_list, cfg.lp, K);
      report.kappa_available = true;
    } catch (const std::exception&) {
      report.kappa_available = false;
    }
  }

  const rate_curve env_w =
      smooth_wasserstein_rate(cfg.a, cfg.J_list, cfg.eps);
  const rate_curve env_k = kolmogorov_rate(cfg.a, cfg.J_list, cfg.eps);

  for (std::size_t jrow = 0; jrow < cfg.J_list.size(); ++jrow) {
    const int J = cfg.J_list[jrow];
    clt_row row;
    row.J = J;
    row.n_paths = cfg.n_paths;
    row.envelope_w = env_w.points[jrow].envelope;
    row.envelope_kol = env_k.points[jrow].envelope;
    if (report.kappa_available)
      for (std::size_t m = 0; m < d; ++m)
        row.limit_variance.push_back(report.kappa.limit_cov[m][m]);

    const auto start = std::chrono::steady_clock::now();
    try {
      const grid_plan plan = plan_grid(cfg, J);
      const frequency_grid grid =
          build_grid(cfg.model, cfg.w, distinct_j, plan.config);
      const std::uint64_t j_seed = counter_rng::derive_stream(
          cfg.seed, static_cast<std::uint64_t>(J));

      std::vector<std::vector<double>> values(cfg.n_paths);
      parallel_for(cfg.n_paths, cfg.threads,
                   [&](std::size_t begin, std::size_t end) {
                     for (std::size_t p = begin; p < end; ++p) {
                       const std::uint64_t path_seed =
                           counter_rng::derive_stream(j_seed, p);
                       const path_bundle bundle =
                           synthesize(cfg.model, cfg.w, grid, distinct_j,
                                      path_seed, false);
                       values[p] = make_f_sample(bundle, cfg.a, cfg.lp, J,
                                                 cfg.coords, sigma_by_scale,
                                                 plan.time_origin)
                                       .values;
                     }
                   });

      // Deterministic reduce in path order.
      row.mean.assign(d, 0.0);
      for (const auto& v : values)
        for (std::size_t m = 0; m < d; ++m) row.mean[m] += v[m];
      const double n = static_cast<double>(cfg.n_paths);
      for (auto& m : row.mean) m /= n;
      row.cov.assign(d, std::vector<double>(d, 0.0));
      for (const auto& v : values)
        for (std::size_t m = 0; m < d; ++m)
          for (std::size_t k = 0; k < d; ++k)
            row.cov[m][k] += (v[m] - row.mean[m]) * (v[k] - row.mean[k]);
      for (std::size_t m = 0; m < d; ++m)
        for (std::size_t k = 0; k < d; ++k) row.cov[m][k] /= (n - 1.0);
      for (std::size_t m = 0; m < d; ++m)
        row.mean_se.push_back(std::sqrt(row.cov[m][m] / n));

      // Matched Gaussian: analytic mean zero, the sample's own covariance.
      if (d == 1) {
        std::vector<double> flat(cfg.n_paths);
        for (std::size_t p = 0; p < cfg.n_paths; ++p) flat[p] = values[p][0];
        row.d_kol = empirical_kolmogorov_1d(flat, 0.0, row.cov[0][0]);
        row.w1 = empirical_w1_1d(flat, 0.0, row.cov[0][0]);
      } else {
        std::vector<std::array<double, 2>> pairs(cfg.n_paths);
        for (std::size_t p = 0; p < cfg.n_paths; ++p)
          pairs[p] = {values[p][0], values[p][1]};
        row.d_kol = empirical_kolmogorov_2d(
            pairs, {0.0, 0.0},
            {{{row.cov[0][0], row.cov[0][1]},
              {row.cov[1][0], row.cov[1][1]}}});
        row.w1 = std::numeric_limits<double>::quiet_NaN();
      }
      if (cfg.keep_samples) row.samples = std::move(values);
    } catch (const std::exception& e) {
      row.status = e.what();
    }
    row.wall_seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    report.rows.push_back(std::move(row));
  }

  // Log-log slope of d_kol against J over J >= 6 (diagnostic only).
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : report.rows)
    if (row.status == "ok" && row.J >= 6 && row.d_kol > 0.0)
      pts.emplace_back(std::log(static_cast<double>(row.J)),
                       std::log(row.d_kol));
  if (pts.size() >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    report.fitted_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    report.slope_available = true;
  }
  return report;
}

namespace {

identity_result check(const std::string& name, bool pass,
                      const std::string& witness = "") {
  return {name, pass, pass ? "" : witness};
}

std::string tuple_witness(int ell, int n_negative) {
  std::ostringstream s;
  s << "(ell = " << ell << ", n_negative = " << n_negative << ")";
  return s.str();
}

}  // namespace

std::vector<identity_result> run_identity_suite() {
  std::vector<identity_result> results;

  // Sign-permutation identity: brute force == hypergeometric == closed form.
  {
    bool pass = true;
    std::string witness;
    for (int ell = 2; ell <= 8 && pass; ell += 2) {
      for (int neg = 0; neg <= ell && pass; ++neg) {
        std::vector<int> signs(static_cast<std::size_t>(ell), 1);
        for (int i = 0; i < neg; ++i) signs[static_cast<std::size_t>(i)] = -1;
        const rational brute = b_bruteforce(ell, signs);
        const rational hyper = b_hypergeometric(ell, neg);
        const rational closed = b_closed_form(ell, neg);
        if (!(brute == hyper && hyper == closed)) {
          pass = false;
          witness = tuple_witness(ell, neg);
        }
      }
    }
    results.push_back(check("sign-permutation identity", pass, witness));
  }

  // Laguerre closed forms against Gauss-Laguerre quadrature.
  {
    const std::vector<nonlinearity> cases = {
        nonlinearity::power(0.5), nonlinearity::power(1.0),
        nonlinearity::power(2.0), nonlinearity::power(3.0),
        nonlinearity::log()};
    bool pass = true;
    std::string witness;
    for (const auto& a : cases) {
      for (int k = 0; k <= 20 && pass; ++k) {
        const double closed = laguerre_coefficient(a, k);
        const double quad = laguerre_coefficient_quadrature(a, k);
        if (std::fabs(closed - quad) > 1e-8) {
          pass = false;
          std::ostringstream s;
          s << "(A = " << to_string(a) << ", k = " << k << ", closed = "
            << closed << ", quadrature = " << quad << ")";
          witness = s.str();
        }
      }
    }
    results.push_back(check("radial coefficient closed forms", pass, witness));
  }

  // Mean-law consistency: the k = 0 coefficient must reproduce the Rayleigh
  // moment exactly for power nonlinearities.
  {
    bool pass = true;
    std::string witness;
    for (double nu : {0.5, 1.0, 2.0, 3.0}) {
      for (double sigma : {0.5, 1.0, 2.0}) {
        const double lhs =
            analytic_mean_u(nonlinearity::power(nu), sigma);
        const double rhs = rayleigh_moment(nu, sigma);
        if (std::fabs(lhs - rhs) > 1e-12 * std::fabs(rhs)) {
          pass = false;
          std::ostringstream s;
          s << "(nu = " << nu << ", sigma = " << sigma << ")";
          witness = s.str();
        }
      }
    }
    results.push_back(check("mean law vs Rayleigh moment", pass, witness));
  }

  // Monte Carlo mean law: small OU run against the analytic mean.
  {
    const spectral_model model = spectral_model::ornstein_uhlenbeck(1.0);
    const analytic_wavelet w{3.0, 1.0};
    const nonlinearity a = nonlinearity::power(2.0);
    grid_config gc;
    gc.n_time = 4096;
    gc.dt = 0.125;
    const std::vector<int> j_set{0};
    const frequency_grid grid = build_grid(model, w, j_set, gc);
    const double sigma = sigma_j(w, model, 0);
    const double target = analytic_mean_u(a, sigma);
    const std::size_t n_paths = 2048;
    std::vector<double> means(n_paths);
    parallel_for(n_paths, 0, [&](std::size_t begin, std::size_t end) {
      for (std::size_t p = begin; p < end; ++p) {
        const path_bundle b = synthesize(
            model, w, grid, j_set, counter_rng::derive_stream(1234, p),
            false);
        const auto& series = b.w.at(0);
        double acc = 0.0;
        std::size_t count = 0;
        for (std::size_t i = b.valid_begin; i < b.valid_end; ++i) {
          acc += a.apply(std::abs(series[i]));
          ++count;
        }
        means[p] = acc / static_cast<double>(count);
      }
    });
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(n_paths);
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= static_cast<double>(n_paths - 1);
    const double se = std::sqrt(var / static_cast<double>(n_paths));
    const bool pass = std::fabs(mean - target) < 4.0 * se;
    std::ostringstream s;
    s << "(MC mean = " << mean << ", analytic = " << target
      << ", se = " << se << ")";
    results.push_back(check("Monte Carlo mean law", pass, s.str()));
  }

  // Theta-sequence values and growth window.
  {
    bool pass = std::fabs(theta1(1)) < 1e-15 &&
                std::fabs(theta1(2) - std::sqrt(2.0)) < 1e-14;
    std::string witness = "(theta1 at 1 or 2)";
    for (int ell = 10; ell <= 40 && pass; ++ell) {
      const double ratio = theta1(ell + 1) / theta1(ell);
      if (!(ratio > 2.5 && ratio <= 3.0)) {
        pass = false;
        std::ostringstream s;
        s << "(ell = " << ell << ", ratio = " << ratio << ")";
        witness = s.str();
      }
    }
    results.push_back(check("theta growth window", pass, witness));
  }

  return results;
}

}  // namespace wavechaos

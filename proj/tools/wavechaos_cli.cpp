#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "wavechaos/bounds.hpp"
#include "wavechaos/chaos.hpp"
#include "wavechaos/config.hpp"
#include "wavechaos/csv.hpp"
#include "wavechaos/gpsim.hpp"
#include "wavechaos/harness.hpp"
#include "wavechaos/quadrature.hpp"
#include "wavechaos/rng.hpp"
#include "wavechaos/transform.hpp"

namespace wc = wavechaos;

namespace {

struct cli_options {
  std::string config_path;
  std::string out_dir = ".";
  int threads = 0;
  bool dump_paths = false;
};

int default_truncation(const wc::run_config& cfg) {
  if (cfg.K != 0) return cfg.K;
  if (cfg.a.finite_chaos())
    return static_cast<int>(std::lround(cfg.a.nu));
  return 40;
}

std::string out_path(const cli_options& opt, const std::string& name) {
  return (std::filesystem::path(opt.out_dir) / name).string();
}

int cmd_coeffs(const wc::run_config& cfg, const cli_options& opt) {
  const int K = default_truncation(cfg);
  const wc::chaos_table table = wc::build_chaos_table(cfg.a, K);
  wc::csv_writer out(out_path(opt, "coeffs.csv"));
  out.header({"k", "c_a", "ell", "c_ell"});
  for (int k = 0; k <= K / 2; ++k) {
    const int ell = 2 * k;
    out.row({std::to_string(k), wc::csv_number(table.c_a[k]),
             std::to_string(ell),
             wc::csv_number(ell >= 2 ? table.c_ell[k - 1] : 0.0)});
  }
  wc::csv_writer summary(out_path(opt, "coeffs_summary.csv"));
  summary.header(
      {"nonlinearity", "K", "tail_sq", "stein_series", "truncation_warning"});
  summary.row({wc::to_string(cfg.a), std::to_string(K),
               wc::csv_number(table.tail_sq),
               wc::csv_number(table.stein_series),
               table.truncation_warning ? "1" : "0"});
  return 0;
}

int cmd_verify_identities(const wc::run_config&, const cli_options& opt) {
  const auto results = wc::run_identity_suite();
  wc::csv_writer out(out_path(opt, "identities.csv"));
  out.header({"name", "pass", "witness"});
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
              << (r.pass ? "" : "  " + r.witness) << "\n";
    out.row({r.name, r.pass ? "1" : "0", r.witness});
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 3;
}

int cmd_sigma(const wc::run_config& cfg, const cli_options& opt) {
  wc::csv_writer out(out_path(opt, "sigma.csv"));
  out.header({"j", "sigma", "sigma_sq"});
  for (int j : cfg.j_list) {
    const double s2 = wc::sigma_j_squared(cfg.w, cfg.model, j);
    out.row({std::to_string(j), wc::csv_number(std::sqrt(s2)),
             wc::csv_number(s2)});
  }
  return 0;
}

int cmd_simulate(const wc::run_config& cfg, const cli_options& opt) {
  wc::grid_config gc;
  if (cfg.n_time) gc.n_time = cfg.n_time;
  if (cfg.dt > 0.0) gc.dt = cfg.dt;
  const wc::frequency_grid grid =
      wc::build_grid(cfg.model, cfg.w, cfg.j_list, gc);
  const wc::path_bundle bundle =
      wc::synthesize(cfg.model, cfg.w, grid, cfg.j_list, cfg.seed, true);

  wc::csv_writer out(out_path(opt, "simulate.csv"));
  out.header({"j", "sigma_model", "var_re_path", "var_im_path"});
  for (int j : cfg.j_list) {
    const auto& w = bundle.w.at(j);
    double mr = 0.0, mi = 0.0;
    const double n =
        static_cast<double>(bundle.valid_end - bundle.valid_begin);
    for (std::size_t i = bundle.valid_begin; i < bundle.valid_end; ++i) {
      mr += w[i].real();
      mi += w[i].imag();
    }
    mr /= n;
    mi /= n;
    double vr = 0.0, vi = 0.0;
    for (std::size_t i = bundle.valid_begin; i < bundle.valid_end; ++i) {
      vr += (w[i].real() - mr) * (w[i].real() - mr);
      vi += (w[i].imag() - mi) * (w[i].imag() - mi);
    }
    out.row({std::to_string(j),
             wc::csv_number(wc::sigma_j(cfg.w, cfg.model, j)),
             wc::csv_number(vr / (n - 1.0)), wc::csv_number(vi / (n - 1.0))});
  }

  if (opt.dump_paths) {
    wc::csv_writer dump(out_path(opt, "paths.csv"));
    std::vector<std::string> names{"t", "x"};
    for (int j : cfg.j_list) {
      names.push_back("re_w_" + std::to_string(j));
      names.push_back("im_w_" + std::to_string(j));
    }
    dump.header(names);
    for (std::size_t i = bundle.valid_begin; i < bundle.valid_end; ++i) {
      std::vector<std::string> cells{wc::csv_number(bundle.times[i]),
                                     wc::csv_number(bundle.x[i])};
      for (int j : cfg.j_list) {
        cells.push_back(wc::csv_number(bundle.w.at(j)[i].real()));
        cells.push_back(wc::csv_number(bundle.w.at(j)[i].imag()));
      }
      dump.row(cells);
    }
  }
  return 0;
}

int cmd_transform(const wc::run_config& cfg, const cli_options& opt) {
  const int J = cfg.J_list.back();
  wc::grid_config gc;
  gc.dt = cfg.dt > 0.0 ? cfg.dt : 0.125;
  double t_abs = 0.0;
  for (double t : cfg.t_list) t_abs = std::max(t_abs, std::fabs(t));
  const double reach =
      wc::phi_support_halfwidth(cfg.lp, J) + std::ldexp(t_abs, J);
  gc.n_time = cfg.n_time ? cfg.n_time : 4096;
  while (static_cast<double>(gc.n_time) * gc.dt < 4.2 * reach)
    gc.n_time *= 2;
  const wc::frequency_grid grid =
      wc::build_grid(cfg.model, cfg.w, cfg.j_list, gc);
  const wc::path_bundle bundle =
      wc::synthesize(cfg.model, cfg.w, grid, cfg.j_list, cfg.seed, false);
  const double origin = static_cast<double>(gc.n_time / 2) * gc.dt;

  std::vector<double> sigma;
  for (int j : cfg.j_list) sigma.push_back(wc::sigma_j(cfg.w, cfg.model, j));
  const wc::f_sample f = wc::make_f_sample(bundle, cfg.a, cfg.lp, J,
                                           cfg.coords(), sigma, origin);

  wc::csv_writer out(out_path(opt, "transform.csv"));
  out.header({"j", "t", "J", "sigma", "mean_s_analytic", "f"});
  for (std::size_t m = 0; m < cfg.j_list.size(); ++m) {
    out.row({std::to_string(cfg.j_list[m]), wc::csv_number(cfg.t_list[m]),
             std::to_string(J), wc::csv_number(sigma[m]),
             wc::csv_number(wc::analytic_mean_s(cfg.a, sigma[m], cfg.lp)),
             wc::csv_number(f.values[m])});
  }
  return 0;
}

int cmd_covlimit(const wc::run_config& cfg, const cli_options& opt) {
  const int K = default_truncation(cfg);
  const wc::kappa_matrix km =
      wc::build_kappa_matrix(cfg.w, cfg.model, cfg.a, cfg.j_list, cfg.t_list,
                             cfg.lp, K, cfg.tau_max);
  wc::csv_writer out(out_path(opt, "covlimit.csv"));
  out.header({"m", "n", "j_m", "j_n", "t_m", "t_n", "kappa", "limit_cov"});
  for (std::size_t m = 0; m < cfg.j_list.size(); ++m)
    for (std::size_t n = 0; n < cfg.j_list.size(); ++n)
      out.row({std::to_string(m), std::to_string(n),
               std::to_string(cfg.j_list[m]), std::to_string(cfg.j_list[n]),
               wc::csv_number(cfg.t_list[m]), wc::csv_number(cfg.t_list[n]),
               wc::csv_number(km.kappa[m][n]),
               wc::csv_number(km.limit_cov[m][n])});
  return 0;
}

int cmd_rates(const wc::run_config& cfg, const cli_options& opt) {
  const wc::rate_curve rw =
      wc::smooth_wasserstein_rate(cfg.a, cfg.J_list, cfg.eps);
  const wc::rate_curve rk = wc::kolmogorov_rate(cfg.a, cfg.J_list, cfg.eps);
  const bool finite = cfg.a.finite_chaos();
  wc::csv_writer out(out_path(opt, "rates.csv"));
  out.header({"J", "K", "K_irrelevant_finite_chaos", "tail_term", "stein_term",
              "envelope_wasserstein", "envelope_kolmogorov",
              "kolmogorov_from_wasserstein"});
  for (std::size_t i = 0; i < rw.points.size(); ++i) {
    const auto& p = rw.points[i];
    out.row({std::to_string(p.J), std::to_string(p.K), finite ? "1" : "0",
             wc::csv_number(p.tail_term), wc::csv_number(p.stein_term),
             wc::csv_number(p.envelope),
             wc::csv_number(rk.points[i].envelope),
             wc::csv_number(wc::kolmogorov_combiner(
                 static_cast<int>(cfg.j_list.size()), 1.0, p.envelope))});
  }
  return 0;
}

int cmd_clt(const wc::run_config& cfg, const cli_options& opt) {
  for (int J : cfg.J_list)
    if (J > cfg.clt_J_cap) {
      std::cerr << "clt: J = " << J << " exceeds the configured cap "
                << cfg.clt_J_cap << " (desk scale); refusing to run\n";
      return 1;
    }
  wc::clt_run_config rc;
  rc.model = cfg.model;
  rc.w = cfg.w;
  rc.a = cfg.a;
  rc.lp = cfg.lp;
  rc.coords = cfg.coords();
  rc.J_list = cfg.J_list;
  rc.n_paths = cfg.n_paths;
  rc.seed = cfg.seed;
  rc.eps = cfg.eps;
  rc.threads = opt.threads;
  rc.n_time = cfg.n_time;
  rc.dt = cfg.dt;
  rc.keep_samples = opt.dump_paths;
  const wc::clt_report report = wc::run_clt_experiment(rc);

  const std::size_t d = rc.coords.size();
  std::vector<std::string> names{"J", "n_paths"};
  for (std::size_t m = 0; m < d; ++m) names.push_back("mean_" + std::to_string(m));
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n)
      names.push_back("cov_" + std::to_string(m) + std::to_string(n));
  for (std::size_t m = 0; m < d; ++m)
    names.push_back("mean_se_" + std::to_string(m));
  names.insert(names.end(), {"d_kol", "w1"});
  for (std::size_t m = 0; m < d; ++m)
    names.push_back("limit_var_" + std::to_string(m));
  names.insert(names.end(),
               {"envelope_wasserstein", "envelope_kolmogorov", "status"});

  wc::csv_writer out(out_path(opt, "report.csv"));
  out.header(names);
  bool any_failed = false;
  for (const auto& row : report.rows) {
    std::vector<std::string> cells{std::to_string(row.J),
                                   std::to_string(row.n_paths)};
    const bool ok = row.status == "ok";
    any_failed = any_failed || !ok;
    auto num = [&](double v) { return ok ? wc::csv_number(v) : ""; };
    for (std::size_t m = 0; m < d; ++m)
      cells.push_back(num(ok ? row.mean[m] : 0.0));
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t n = 0; n < d; ++n)
        cells.push_back(num(ok ? row.cov[m][n] : 0.0));
    for (std::size_t m = 0; m < d; ++m)
      cells.push_back(num(ok ? row.mean_se[m] : 0.0));
    cells.push_back(num(row.d_kol));
    cells.push_back(num(row.w1));
    for (std::size_t m = 0; m < d; ++m)
      cells.push_back(row.limit_variance.empty()
                          ? ""
                          : wc::csv_number(row.limit_variance[m]));
    cells.push_back(wc::csv_number(row.envelope_w));
    cells.push_back(wc::csv_number(row.envelope_kol));
    cells.push_back(row.status);
    out.row(cells);
    std::cout << "J = " << row.J << ": "
              << (ok ? "d_kol = " + wc::csv_number(row.d_kol)
                     : "failed: " + row.status)
              << "\n";
  }
  if (report.slope_available)
    std::cout << "fitted log-log slope of d_kol vs J (diagnostic): "
              << wc::csv_number(report.fitted_slope) << "\n";

  if (opt.dump_paths)
    for (const auto& row : report.rows) {
      if (row.samples.empty()) continue;
      wc::csv_writer dump(
          out_path(opt, "samples_J" + std::to_string(row.J) + ".csv"));
      std::vector<std::string> header;
      for (std::size_t m = 0; m < d; ++m)
        header.push_back("f_" + std::to_string(m));
      dump.header(header);
      for (const auto& s : row.samples) {
        std::vector<std::string> cells;
        for (double v : s) cells.push_back(wc::csv_number(v));
        dump.row(cells);
      }
    }
  return any_failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Moving-averaged modulus wavelet transform of stationary Gaussian "
      "processes: coefficients, simulation, and limit-theorem experiments"};
  app.require_subcommand(1);

  cli_options opt;
  app.add_option("--config", opt.config_path, "Path to the run config file")
      ->required();
  app.add_option("--out", opt.out_dir, "Output directory for CSV files");
  app.add_option("--threads", opt.threads,
                 "Worker threads (0 = WAVECHAOS_THREADS or hardware)");
  app.add_flag("--dump-paths", opt.dump_paths,
               "Also write per-path / per-sample CSV dumps");

  struct command {
    const char* name;
    const char* help;
    int (*fn)(const wc::run_config&, const cli_options&);
  };
  const std::vector<command> commands{
      {"coeffs", "Emit the chaos coefficient table", cmd_coeffs},
      {"verify-identities", "Run the exact identity suite",
       cmd_verify_identities},
      {"sigma", "Per-scale standard deviations", cmd_sigma},
      {"simulate", "Synthesize one path bundle and report variances",
       cmd_simulate},
      {"transform", "Apply the moving-averaged transform to one path",
       cmd_transform},
      {"covlimit", "Assemble the limit covariance matrix", cmd_covlimit},
      {"rates", "Emit the rate envelopes and bound terms", cmd_rates},
      {"clt", "Run the Monte Carlo limit-theorem experiment", cmd_clt},
  };
  for (const auto& c : commands) app.add_subcommand(c.name, c.help);

  CLI11_PARSE(app, argc, argv);

  try {
    const wc::run_config cfg = wc::parse_config(opt.config_path);
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    for (const auto& c : commands)
      if (app.get_subcommand(c.name)->parsed()) return c.fn(cfg, opt);
    return 1;
  } catch (const wc::config_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  }
}

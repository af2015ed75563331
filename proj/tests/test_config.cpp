#include <doctest.h>

#include "wavechaos/config.hpp"

using namespace wavechaos;

TEST_CASE("minimal config gets the documented defaults") {
  const run_config cfg = parse_config_text("run.seed = 7\n");
  CHECK(cfg.seed == 7);
  CHECK(cfg.model.kind() == spectral_model::family::ornstein_uhlenbeck);
  CHECK(cfg.w.alpha == doctest::Approx(3.0));
  CHECK(cfg.w.gamma == doctest::Approx(1.0));
  CHECK(cfg.lp.kind() == low_pass::family::gaussian);
  CHECK(cfg.a.kind == nonlinearity::family::power);
  CHECK(cfg.a.nu == doctest::Approx(2.0));
  CHECK(cfg.n_paths == 10000);
  CHECK(cfg.eps == doctest::Approx(0.1));
  CHECK(cfg.j_list == std::vector<int>{0});
  CHECK(cfg.J_list == std::vector<int>{4, 6, 8});
}

TEST_CASE("full config round-trips every key") {
  const run_config cfg = parse_config_text(
      "model.kind = powerlaw\n"
      "model.beta = 0.5\n"
      "model.cx_at_0 = 2\n"
      "model.profile = exp_decay\n"
      "model.profile_scale = 1.5\n"
      "wavelet.alpha = 1\n"
      "wavelet.gamma = 2\n"
      "lowpass.kind = laplace\n"
      "nonlinearity = log\n"
      "run.j_list = 0, 2\n"
      "run.t_list = 0, 1\n"
      "run.J_list = 6, 8, 10\n"
      "run.n_paths = 500\n"
      "run.seed = 99\n"
      "run.eps = 0.2\n"
      "chaos.K = 20\n"
      "grid.n_time = 8192\n"
      "grid.dt = 0.0625\n"
      "covlimit.tau_max = 30\n");
  CHECK(cfg.model.kind() == spectral_model::family::power_law);
  CHECK(cfg.model.beta() == doctest::Approx(0.5));
  CHECK(cfg.model.profile() == profile_kind::exp_decay);
  CHECK(cfg.w.gamma == doctest::Approx(2.0));
  CHECK(cfg.lp.kind() == low_pass::family::laplace);
  CHECK(cfg.a.kind == nonlinearity::family::log);
  CHECK(cfg.j_list == std::vector<int>{0, 2});
  CHECK(cfg.t_list == std::vector<double>{0.0, 1.0});
  CHECK(cfg.coords().size() == 2);
  CHECK(cfg.coords()[1].j == 2);
  CHECK(cfg.K == 20);
  CHECK(cfg.n_time == 8192);
  CHECK(cfg.dt == doctest::Approx(0.0625));
  CHECK(cfg.tau_max == doctest::Approx(30.0));
}

TEST_CASE("all problems are reported together, naming the keys") {
  try {
    parse_config_text(
        "wavelet.alpha = -1\n"
        "lowpass.kind = hann\n"
        "run.J_list = 8, 6\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    // Bad alpha, bad low-pass kind, unsorted ladder, and the missing seed.
    CHECK(e.errors().size() == 4);
    const std::string all = e.what();
    CHECK(all.find("wavelet.alpha") != std::string::npos);
    CHECK(all.find("gaussian") != std::string::npos);  // lists valid kinds
    CHECK(all.find("laplace") != std::string::npos);
    CHECK(all.find("cauchy") != std::string::npos);
    CHECK(all.find("run.J_list") != std::string::npos);
    CHECK(all.find("run.seed") != std::string::npos);
  }
}

TEST_CASE("seed is mandatory and unknown keys are rejected") {
  CHECK_THROWS_AS(parse_config_text(""), config_error);
  try {
    parse_config_text("run.seed = 1\nrun.sede = 2\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("unknown key: run.sede") !=
          std::string::npos);
  }
}

TEST_CASE("comments, blanks, and scalar t broadcast") {
  const run_config cfg = parse_config_text(
      "# experiment\n"
      "\n"
      "run.seed = 3   # inline comment\n"
      "run.j_list = 0, 1, 2\n"
      "run.t_list = 0\n");
  CHECK(cfg.j_list.size() == 3);
  CHECK(cfg.t_list == std::vector<double>{0.0, 0.0, 0.0});
}

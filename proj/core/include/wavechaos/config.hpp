#ifndef WAVECHAOS_CONFIG_HPP
#define WAVECHAOS_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavechaos/chaos.hpp"
#include "wavechaos/spectra.hpp"
#include "wavechaos/transform.hpp"
#include "wavechaos/wavelets.hpp"

namespace wavechaos {

/// Thrown by parse_config with every problem found, not just the first.
class config_error : public std::runtime_error {
public:
  explicit config_error(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

private:
  std::vector<std::string> errors_;
};

/// Fully validated run configuration with defaults applied. The file format
/// is flat `section.key = value` lines, `#` comments, blank lines ignored.
struct run_config {
  spectral_model model = spectral_model::ornstein_uhlenbeck(1.0);
  analytic_wavelet w{3.0, 1.0};
  low_pass lp{low_pass::family::gaussian};
  nonlinearity a = nonlinearity::power(2.0);

  std::vector<int> j_list{0};
  std::vector<double> t_list{0.0};
  std::vector<int> J_list{4, 6, 8};
  std::size_t n_paths = 10000;
  std::uint64_t seed = 0;  // mandatory in the file; no wall-clock seeding
  double eps = 0.1;
  int K = 0;               // chaos truncation; 0 = automatic
  std::size_t n_time = 0;  // grid override; 0 = automatic
  double dt = 0.0;         // grid override; 0 = automatic
  double tau_max = 0.0;    // covariance-integral override; 0 = automatic
  int clt_J_cap = 12;
  std::string output_dir = ".";

  std::vector<f_coordinate> coords() const;
};

run_config parse_config_text(const std::string& text);
run_config parse_config(const std::string& path);

}  // namespace wavechaos

#endif

#include "wavechaos/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <type_traits>

namespace wavechaos {

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
  std::ostringstream s;
  s << "configuration invalid (" << errors.size() << " problem"
    << (errors.size() == 1 ? "" : "s") << "):";
  for (const auto& e : errors) s << "\n  - " << e;
  return s.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Collected raw key=value pairs plus the consumption bookkeeping used to
/// report unknown keys.
struct key_table {
  std::map<std::string, std::string> values;
  std::map<std::string, bool> used;
  std::vector<std::string>* errors = nullptr;

  bool has(const std::string& key) {
    const auto it = values.find(key);
    if (it == values.end()) return false;
    used[key] = true;
    return true;
  }

  std::string raw(const std::string& key) { return values.at(key); }

  double number(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const std::string v = raw(key);
    try {
      std::size_t pos = 0;
      const double x = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("trailing characters");
      return x;
    } catch (const std::exception&) {
      errors->push_back(key + ": not a number: '" + v + "'");
      return fallback;
    }
  }

  std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const std::string v = raw(key);
    try {
      std::size_t pos = 0;
      if (!v.empty() && v[0] == '-') throw std::invalid_argument("negative");
      const std::uint64_t x = std::stoull(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("trailing characters");
      return x;
    } catch (const std::exception&) {
      errors->push_back(key + ": not a nonnegative integer: '" + v + "'");
      return fallback;
    }
  }

  template <typename T>
  std::vector<T> list(const std::string& key, std::vector<T> fallback) {
    if (!has(key)) return fallback;
    std::vector<T> out;
    std::stringstream stream(raw(key));
    std::string item;
    while (std::getline(stream, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      try {
        std::size_t pos = 0;
        const double x = std::stod(item, &pos);
        if (pos != item.size())
          throw std::invalid_argument("trailing characters");
        if constexpr (std::is_integral_v<T>) {
          if (x != std::floor(x)) throw std::invalid_argument("not integral");
          out.push_back(static_cast<T>(x));
        } else {
          out.push_back(static_cast<T>(x));
        }
      } catch (const std::exception&) {
        errors->push_back(key + ": bad list entry '" + item + "'");
        return fallback;
      }
    }
    if (out.empty()) {
      errors->push_back(key + ": empty list");
      return fallback;
    }
    return out;
  }
};

profile_kind parse_profile(const std::string& s,
                           std::vector<std::string>& errors) {
  if (s == "constant") return profile_kind::constant;
  if (s == "exp_decay") return profile_kind::exp_decay;
  if (s == "rational_decay") return profile_kind::rational_decay;
  errors.push_back(
      "model.profile: unknown profile '" + s +
      "' (valid: constant, exp_decay, rational_decay)");
  return profile_kind::constant;
}

}  // namespace

config_error::config_error(std::vector<std::string> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

std::vector<f_coordinate> run_config::coords() const {
  std::vector<f_coordinate> out;
  for (std::size_t i = 0; i < j_list.size(); ++i)
    out.push_back({j_list[i], t_list[i]});
  return out;
}

run_config parse_config_text(const std::string& text) {
  std::vector<std::string> errors;
  key_table keys;
  keys.errors = &errors;

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(line_no) +
                       ": expected key = value, got '" + line + "'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      errors.push_back("line " + std::to_string(line_no) +
                       ": empty key or value");
      continue;
    }
    if (keys.values.count(key))
      errors.push_back("line " + std::to_string(line_no) + ": duplicate key " +
                       key);
    keys.values[key] = value;
  }

  run_config cfg;

  // Spectral model.
  std::string model_kind = "ou";
  if (keys.has("model.kind")) model_kind = keys.raw("model.kind");
  const double mean = keys.number("model.mean", 0.0);
  if (model_kind == "ou") {
    const double c = keys.number("model.c", 1.0);
    if (c <= 0.0)
      errors.push_back("model.c: must be positive, got " + std::to_string(c));
    else
      cfg.model = spectral_model::ornstein_uhlenbeck(c, mean);
  } else if (model_kind == "powerlaw") {
    const double beta = keys.number("model.beta", 1.0);
    const double cx0 = keys.number("model.cx_at_0", 1.0);
    const double scale = keys.number("model.profile_scale", 1.0);
    profile_kind profile = profile_kind::constant;
    if (keys.has("model.profile"))
      profile = parse_profile(keys.raw("model.profile"), errors);
    if (!(beta > 0.0 && beta <= 1.0))
      errors.push_back("model.beta: must lie in (0, 1]");
    else if (cx0 <= 0.0)
      errors.push_back("model.cx_at_0: must be positive");
    else if (scale <= 0.0)
      errors.push_back("model.profile_scale: must be positive");
    else
      cfg.model = spectral_model::power_law(beta, cx0, profile, scale, mean);
  } else {
    errors.push_back("model.kind: unknown model '" + model_kind +
                     "' (valid: ou, powerlaw)");
  }

  // Wavelet.
  const double alpha = keys.number("wavelet.alpha", 3.0);
  const double gamma = keys.number("wavelet.gamma", 1.0);
  if (alpha <= 0.0)
    errors.push_back("wavelet.alpha: must be positive");
  else if (gamma <= 0.0)
    errors.push_back("wavelet.gamma: must be positive");
  else
    cfg.w = analytic_wavelet{alpha, gamma};

  // Low-pass.
  if (keys.has("lowpass.kind")) {
    try {
      cfg.lp = low_pass{low_pass_family_from_string(keys.raw("lowpass.kind"))};
    } catch (const std::exception& e) {
      errors.push_back(std::string("lowpass.kind: ") + e.what());
    }
  }

  // Nonlinearity, e.g. "power:2" or "log".
  if (keys.has("nonlinearity")) {
    try {
      cfg.a = nonlinearity_from_string(keys.raw("nonlinearity"));
    } catch (const std::exception& e) {
      errors.push_back(std::string("nonlinearity: ") + e.what());
    }
  }

  // Run parameters.
  cfg.j_list = keys.list<int>("run.j_list", cfg.j_list);
  cfg.t_list = keys.list<double>("run.t_list", cfg.t_list);
  if (cfg.t_list.size() == 1 && cfg.j_list.size() > 1)
    cfg.t_list.assign(cfg.j_list.size(), cfg.t_list[0]);
  if (cfg.j_list.size() != cfg.t_list.size())
    errors.push_back("run.j_list / run.t_list: lengths must match");
  cfg.J_list = keys.list<int>("run.J_list", cfg.J_list);
  if (!std::is_sorted(cfg.J_list.begin(), cfg.J_list.end()) ||
      std::adjacent_find(cfg.J_list.begin(), cfg.J_list.end()) !=
          cfg.J_list.end())
    errors.push_back("run.J_list: must be strictly ascending");
  for (int J : cfg.J_list)
    if (J < 0) {
      errors.push_back("run.J_list: J must be >= 0");
      break;
    }
  cfg.n_paths =
      static_cast<std::size_t>(keys.unsigned_int("run.n_paths", 10000));
  if (keys.values.count("run.seed")) {
    cfg.seed = keys.unsigned_int("run.seed", 0);
  } else {
    errors.push_back(
        "run.seed: required (all randomness flows from the config seed; "
        "wall-clock seeding is refused)");
  }
  cfg.eps = keys.number("run.eps", 0.1);
  if (!(cfg.eps > 0.0 && cfg.eps <= 0.5))
    errors.push_back("run.eps: must lie in (0, 0.5]");
  cfg.K = static_cast<int>(keys.unsigned_int("chaos.K", 0));
  if (cfg.K != 0 && (cfg.K < 2 || cfg.K % 2 != 0))
    errors.push_back("chaos.K: must be an even integer >= 2 (or omitted)");
  cfg.n_time = static_cast<std::size_t>(keys.unsigned_int("grid.n_time", 0));
  if (cfg.n_time != 0 && (cfg.n_time & (cfg.n_time - 1)) != 0)
    errors.push_back("grid.n_time: must be a power of two");
  cfg.dt = keys.number("grid.dt", 0.0);
  if (cfg.dt < 0.0) errors.push_back("grid.dt: must be >= 0 (0 = automatic)");
  cfg.tau_max = keys.number("covlimit.tau_max", 0.0);
  if (cfg.tau_max < 0.0)
    errors.push_back("covlimit.tau_max: must be >= 0 (0 = automatic)");

  for (const auto& [key, value] : keys.values)
    if (!keys.used.count(key)) errors.push_back("unknown key: " + key);

  if (!errors.empty()) throw config_error(std::move(errors));
  return cfg;
}

run_config parse_config(const std::string& path) {
  std::ifstream file(path);
  if (!file)
    throw config_error({"cannot open config file: " + path});
  std::ostringstream text;
  text << file.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace wavechaos

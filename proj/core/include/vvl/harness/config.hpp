#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vvl/scenarios/forcing.hpp"
#include "vvl/scenarios/initial_data.hpp"
#include "vvl/spectral/simulation.hpp"

namespace vvl {

/// Everything needed to reproduce one run. On disk it is a sectioned
/// key-value file:
///
///   [run]      n, nu, p, T, cadence, output, snapshots, c_gn
///   [scenario] kind, a, delta_scale, delta_exponent, gamma, seed, target_energy
///   [forcing]  kind, amplitude, frequency, gamma, drift_x, drift_y, seed
///   [stepper]  cfl, dt_cap_fraction
struct SimConfig {
  int n = 128;
  double nu = 1e-3;
  double p = 1.5;
  double horizon = 1.0;
  double cadence = 0.01;
  std::string output_dir = "vvl-out";
  bool snapshots = false;
  /// Interpolation constant; 0 means estimate it numerically.
  double c_gn = 0.0;
  ScenarioSpec scenario;
  ForcingSpec forcing;
  StepperSettings stepper;

  RunSettings run_settings() const;
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Thrown for malformed configuration text; the message names the field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dotted names of every recognized key, e.g. "run.n".
const std::vector<std::string>& config_keys();

/// Sets one dotted key from its textual value. Throws ConfigError.
void apply_setting(SimConfig& config, const std::string& key, const std::string& value);

using Setting = std::pair<std::string, std::string>;

/// Parses the file format above over the defaults, applies `overrides` in
/// order, then validates.
SimConfig parse_config(std::istream& in, std::span<const Setting> overrides = {});
SimConfig load_config(const std::string& path, std::span<const Setting> overrides = {});

/// Value of a key as it would be written to a file.
std::string setting_value(const SimConfig& config, const std::string& key);

/// Round-trippable text form.
std::string to_config_text(const SimConfig& config);

}  // namespace vvl

#pragma once

#include <string>
#include <vector>

#include "vvl/gronwall/gronwall.hpp"
#include "vvl/harness/config.hpp"
#include "vvl/scenarios/forcing.hpp"
#include "vvl/spectral/simulation.hpp"

namespace vvl {

struct GateResult {
  std::string name;
  bool passed = false;
  /// Measured quantity and the threshold it is compared with.
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct RunReport {
  SimConfig config;
  RunOutput output;
  ForcingNorms forcing_norms;
  double c_gn = 0.0;
  std::vector<GateResult> gates;
  double elapsed_seconds = 0.0;

  bool passed() const;
};

/// c_gn from the config, or the numerical estimate when it is 0.
double resolve_gagliardo_nirenberg(const SimConfig& config);

/// Time-independent Gronwall constants for one run from its measured norms.
GronwallConstants run_constants(const SimConfig& config, const RunOutput& output, const ForcingNorms& norms,
                                double c_gn);

/// z(t) against the supersolution started from the first sample after t = 0.
/// At most `max_samples` evenly strided samples are compared.
ComparisonResult enstrophy_comparison(const RunOutput& output, const GronwallParams& params,
                                      std::size_t max_samples = 200);

/// Invariant gates applicable to this configuration:
///   lp_bound, energy_balance, comparison (nu > 0), taylor_green (unforced
///   Taylor-Green data), conservation (nu = 0, unforced),
///   enstrophy_nonincreasing (nu > 0, unforced).
std::vector<GateResult> evaluate_gates(const SimConfig& config, const RunOutput& output,
                                       const ForcingNorms& norms, double c_gn);

/// Runs one configuration and evaluates its gates. With `write_outputs`
/// the diagnostics CSV, the manifest and (if enabled) snapshots land in
/// config.output_dir. Throws SolverInstability on blow-up.
RunReport run_single(const SimConfig& config, bool write_outputs = true);

}  // namespace vvl

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "vvl/diagnostics/diagnostics.hpp"
#include "vvl/spectral/stepper.hpp"

namespace vvl {

struct StepperSettings {
  double cfl = 0.4;
  /// Hard cap on the step as a fraction of the horizon.
  double dt_cap_fraction = 1e-3;
};

struct RunSettings {
  double horizon = 1.0;
  /// Requested spacing of diagnostics samples; adjusted down so that an
  /// integer number of samples spans [0, horizon].
  double cadence = 0.1;
  double p = 1.5;
  StepperSettings stepper;
};

using SampleObserver = std::function<void(const SimState&, const DiagnosticsRecord&)>;

struct RunOutput {
  std::vector<DiagnosticsRecord> records;
  std::vector<double> forcing_lp;
  std::vector<double> forcing_lp_integral;
  SimState initial;
  SimState final_state;
  std::size_t steps = 0;
};

/// Sample times 0 = t_0 < ... < t_K = horizon with K = max(1, round(horizon/cadence)).
std::vector<double> sample_times(double horizon, double cadence);

/// Integrates from `initial` (dealiased on entry) up to the horizon. Steps
/// land exactly on the sample times; the observer sees every sample.
/// Deterministic for identical inputs. Throws SolverInstability on blow-up.
RunOutput run(const RunSettings& settings, SimState initial, const ForcingSource& forcing,
              const SampleObserver& observer = {});

}  // namespace vvl

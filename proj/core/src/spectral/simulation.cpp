#include "vvl/spectral/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vvl {

std::vector<double> sample_times(double horizon, double cadence) {
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (!(cadence > 0.0)) throw std::invalid_argument("cadence must be positive");
  const auto count = std::max<long>(1, std::lround(horizon / cadence));
  std::vector<double> times(static_cast<std::size_t>(count) + 1);
  for (long k = 0; k <= count; ++k) times[k] = horizon * static_cast<double>(k) / static_cast<double>(count);
  return times;
}

RunOutput run(const RunSettings& settings, SimState initial, const ForcingSource& forcing,
              const SampleObserver& observer) {
  const Grid grid = initial.omega.grid();
  initial.omega.dealias();
  initial.omega.enforce_hermitian();
  initial.omega.remove_mean();

  const auto times = sample_times(settings.horizon, settings.cadence);
  const double dt_cap = settings.stepper.dt_cap_fraction * settings.horizon;
  if (!(dt_cap > 0.0) || !(settings.stepper.cfl > 0.0)) {
    throw std::invalid_argument("stepper settings must be positive");
  }

  RunOutput out{{}, {}, {}, initial, initial, 0};
  SimState state = std::move(initial);
  IfRk4Stepper stepper(grid, state.nu);
  DiagnosticsAccumulator diagnostics(grid, state.nu, settings.p);
  SpectralField g(grid);

  auto sample = [&] {
    const SpectralField* gp = nullptr;
    if (forcing) {
      forcing(state.t, g);
      gp = &g;
    }
    const auto& rec = diagnostics.record(state.t, state.omega, gp);
    if (observer) observer(state, rec);
  };

  state.t = times.front();
  sample();
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double target = times[k];
    while (state.t < target) {
      const double remaining = target - state.t;
      // Merge a sliver below 1e-9 of the cap into the current step.
      const double limit = remaining <= dt_cap * (1.0 + 1e-9) ? remaining : dt_cap;
      const double used = stepper.advance(state, limit, settings.stepper.cfl, forcing);
      ++out.steps;
      if (used == remaining) state.t = target;
      if (target - state.t < 1e-12 * settings.horizon) state.t = target;
    }
    sample();
  }

  out.records = diagnostics.records();
  out.forcing_lp = diagnostics.forcing_lp();
  out.forcing_lp_integral = diagnostics.forcing_lp_integral();
  out.final_state = std::move(state);
  return out;
}

}  // namespace vvl

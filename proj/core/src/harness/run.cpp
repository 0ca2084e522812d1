#include "vvl/harness/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>

#include "vvl/diagnostics/csv.hpp"
#include "vvl/gronwall/gagliardo_nirenberg.hpp"
#include "vvl/harness/manifest.hpp"
#include "vvl/scenarios/initial_data.hpp"
#include "vvl/spectral/snapshot.hpp"
#include "vvl/spectral/transform.hpp"

namespace vvl {

namespace {

constexpr double kBalanceTolerance = 1e-6;
constexpr double kTaylorGreenEnergyTolerance = 1e-8;
constexpr double kTaylorGreenVorticityTolerance = 1e-6;
constexpr double kConservationTolerance = 1e-6;

GateResult gate(std::string name, double value, double threshold, std::string detail = {}) {
  return {std::move(name), value <= threshold, value, threshold, std::move(detail)};
}

double max_abs_difference(const SpectralField& a, const SpectralField& b) {
  Transform transform(a.grid());
  const auto va = transform.to_physical(a);
  const auto vb = transform.to_physical(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) worst = std::max(worst, std::abs(va[i] - vb[i]));
  return worst;
}

}  // namespace

bool RunReport::passed() const {
  return std::all_of(gates.begin(), gates.end(), [](const GateResult& g) { return g.passed; });
}

double resolve_gagliardo_nirenberg(const SimConfig& config) {
  return config.c_gn > 0.0 ? config.c_gn : estimate_gagliardo_nirenberg(config.p);
}

GronwallConstants run_constants(const SimConfig& config, const RunOutput& output, const ForcingNorms& norms,
                                double c_gn) {
  return estimate_params(config.p, output.records.front().lp_norm, norms.l1_lp, norms.linf_l2, c_gn);
}

ComparisonResult enstrophy_comparison(const RunOutput& output, const GronwallParams& params,
                                      std::size_t max_samples) {
  const auto& records = output.records;
  if (records.size() < 2) throw std::invalid_argument("enstrophy_comparison: need at least two samples");
  const std::size_t available = records.size() - 1;
  const std::size_t stride = std::max<std::size_t>(1, (available + max_samples - 1) / std::max<std::size_t>(1, max_samples));
  std::vector<std::size_t> picks;
  for (std::size_t i = 1; i < records.size(); i += stride) picks.push_back(i);
  if (picks.back() != records.size() - 1) picks.push_back(records.size() - 1);

  const double delta = records[1].t;
  std::vector<double> times;
  std::vector<TimeValue> z;
  for (std::size_t i : picks) {
    times.push_back(records[i].t);
    z.push_back({records[i].t, records[i].enstrophy});
  }
  const auto m = supersolution_series(times, records[1].enstrophy, delta, params);
  std::vector<TimeValue> ms;
  for (std::size_t i = 0; i < m.size(); ++i) ms.push_back({times[i], m[i]});
  return comparison_check(z, ms);
}

std::vector<GateResult> evaluate_gates(const SimConfig& config, const RunOutput& output,
                                       const ForcingNorms& norms, double c_gn) {
  std::vector<GateResult> gates;
  const auto& records = output.records;
  const bool unforced = config.forcing.kind == ForcingKind::None || config.forcing.amplitude == 0.0;
  const double e0 = records.front().energy;

  const double omega0_lp = records.front().lp_norm;
  const auto lp = lp_bound_check(records, omega0_lp, output.forcing_lp_integral);
  gates.push_back({"lp_bound", lp.holds, lp.worst_margin, 0.0,
                   lp.holds ? std::string{} : fmt::format("first violation at sample {}", *lp.first_violation)});

  double worst_residual = 0.0;
  for (const auto& r : records) worst_residual = std::max(worst_residual, std::abs(r.balance_residual));
  gates.push_back(gate("energy_balance", worst_residual, kBalanceTolerance * e0));

  if (config.nu > 0.0 && omega0_lp > 0.0) {
    const auto params = run_constants(config, output, norms, c_gn).at(config.nu);
    const auto cmp = enstrophy_comparison(output, params);
    gates.push_back({"comparison", cmp.holds, cmp.worst_ratio, 1.0 + 1e-6,
                     cmp.holds ? std::string{} : fmt::format("first violation at compared sample {}", *cmp.first_violation)});
  }

  if (unforced && config.scenario.kind == ScenarioKind::TaylorGreen) {
    double worst_energy = 0.0;
    for (const auto& r : records) {
      const double exact = taylor_green(Grid(config.n), config.nu, r.t).energy;
      worst_energy = std::max(worst_energy, std::abs(r.energy - exact) / exact);
    }
    gates.push_back(gate("taylor_green_energy", worst_energy, kTaylorGreenEnergyTolerance));
    const auto exact = taylor_green(Grid(config.n), config.nu, output.final_state.t).omega;
    gates.push_back(gate("taylor_green_vorticity", max_abs_difference(output.final_state.omega, exact),
                         kTaylorGreenVorticityTolerance));
  }

  if (unforced && config.nu == 0.0) {
    double drift_e = 0.0, drift_z = 0.0;
    const double z0 = records.front().enstrophy;
    for (const auto& r : records) {
      drift_e = std::max(drift_e, std::abs(r.energy - e0) / e0);
      drift_z = std::max(drift_z, std::abs(r.enstrophy - z0) / z0);
    }
    gates.push_back(gate("energy_conservation", drift_e, kConservationTolerance));
    gates.push_back(gate("enstrophy_conservation", drift_z, kConservationTolerance));
  }

  if (unforced && config.nu > 0.0) {
    double worst = -INFINITY;
    for (std::size_t i = 1; i < records.size(); ++i) {
      worst = std::max(worst, (records[i].enstrophy - records[i - 1].enstrophy) / records[i - 1].enstrophy);
    }
    gates.push_back(gate("enstrophy_nonincreasing", worst, 1e-12));
  }
  return gates;
}

RunReport run_single(const SimConfig& config, bool write_outputs) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const Grid grid(config.n);
  const Forcing forcing(config.forcing, grid);
  SimState initial{0.0, make_initial_vorticity(config.scenario, grid, config.nu), config.nu};
  RunReport report{config, run(config.run_settings(), std::move(initial), forcing.source()),
                   forcing.norms(config.horizon, config.p), resolve_gagliardo_nirenberg(config), {}, 0.0};
  report.gates = evaluate_gates(config, report.output, report.forcing_norms, report.c_gn);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (write_outputs) {
    const std::filesystem::path dir(config.output_dir);
    std::filesystem::create_directories(dir);
    write_diagnostics_csv((dir / "diagnostics.csv").string(), report.output.records);
    if (config.snapshots) {
      const auto& init = report.output.initial;
      const auto& fin = report.output.final_state;
      write_snapshot((dir / "initial.vvf").string(), make_snapshot(init.omega, init.t, init.nu));
      write_snapshot((dir / "final.vvf").string(), make_snapshot(fin.omega, fin.t, fin.nu));
    }
    write_text_file((dir / "manifest.json").string(), run_manifest_json(report));
  }
  return report;
}

}  // namespace vvl

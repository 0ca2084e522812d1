// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "support/oracles.hpp"
#include "vvl/diagnostics/diagnostics.hpp"
#include "vvl/gronwall/gronwall.hpp"
#include "vvl/harness/config.hpp"
#include "vvl/harness/run.hpp"
#include "vvl/harness/sweep.hpp"
#include "vvl/scenarios/initial_data.hpp"
#include "vvl/spectral/simulation.hpp"
#include "vvl/spectral/transform.hpp"

namespace {

using namespace vvl;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

// Pinned tolerances and budgets.
constexpr double kTgVorticityTolerance = 1e-6;
constexpr double kTgEnergyTolerance = 1e-8;
constexpr double kTgSeconds = 5.0;
constexpr double kBalanceTolerance = 1e-6;
constexpr double kBalanceSeconds = 120.0;
constexpr double kRoundTripTolerance = 1e-8;
constexpr double kRepresentationTolerance = 1e-6;
constexpr double kSelfTestSeconds = 30.0;
constexpr double kSlopeTolerance = 0.01;
constexpr double kSweepSeconds = 1800.0;
constexpr double kDissipationDrop = 0.5;
constexpr double kBoundSlack = 1e-3;

struct Line {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Line> lines;

void report(std::string name, bool passed, std::string detail) {
  fmt::print("{} {}: {}\n", passed ? "PASS" : "FAIL", name, detail);
  std::fflush(stdout);
  lines.push_back({std::move(name), passed, std::move(detail)});
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct LpTally {
  int runs = 0;
  int failures = 0;
  double worst_margin = -INFINITY;
  void add(const RunOutput& out) {
    const auto check = lp_bound_check(out.records, out.records.front().lp_norm, out.forcing_lp_integral);
    ++runs;
    if (!check.holds) ++failures;
    worst_margin = std::max(worst_margin, check.worst_margin);
  }
};

void taylor_green_exactness(LpTally& lp) {
  const auto start = Clock::now();
  const Grid grid(64);
  const double nu = 0.01, horizon = 1.0;
  RunSettings settings{horizon, 0.1, 1.5, {}};
  Transform transform(grid);
  double worst_vorticity = 0.0, worst_energy = 0.0;
  int samples = 0;
  const auto observer = [&](const SimState& state, const DiagnosticsRecord& record) {
    const auto values = transform.to_physical(state.omega);
    const double decay = std::exp(-2.0 * nu * state.t);
    for (int j = 0; j < grid.n(); ++j) {
      for (int i = 0; i < grid.n(); ++i) {
        const double exact = 2.0 * decay * std::sin(grid.coordinate(i)) * std::sin(grid.coordinate(j));
        worst_vorticity = std::max(worst_vorticity, std::abs(values[grid.real_index(j, i)] - exact));
      }
    }
    const double e_exact = 2.0 * kPi * kPi * std::exp(-4.0 * nu * state.t);
    worst_energy = std::max(worst_energy, std::abs(record.energy - e_exact) / (2.0 * kPi * kPi));
    if (state.t > 0.0) ++samples;
  };
  const auto out = run(settings, {0.0, taylor_green(grid, nu, 0.0).omega, nu}, {}, observer);
  const double elapsed = seconds_since(start);
  lp.add(out);
  report("taylor_green_exactness",
         samples == 10 && worst_vorticity <= kTgVorticityTolerance && worst_energy <= kTgEnergyTolerance &&
             elapsed <= kTgSeconds,
         fmt::format("{} samples, max vorticity error {:.3g} (<= {:g}), max relative energy error {:.3g} (<= {:g}), "
                     "{:.2f} s (<= {:g} s)",
                     samples, worst_vorticity, kTgVorticityTolerance, worst_energy, kTgEnergyTolerance, elapsed,
                     kTgSeconds));
}

void energy_balance(const std::string& config_dir, LpTally& lp) {
  const auto config = load_config(config_dir + "/forced_low_mode.ini");
  const auto start = Clock::now();
  const auto rep = run_single(config, false);
  const double elapsed = seconds_since(start);
  lp.add(rep.output);
  const double e0 = rep.output.records.front().energy;
  double worst = 0.0;
  for (const auto& r : rep.output.records) worst = std::max(worst, std::abs(r.balance_residual));
  const bool ok = config.n == 256 && config.nu == 1e-3 && config.horizon == 2.0 &&
                  config.forcing.kind == ForcingKind::LowMode && worst <= kBalanceTolerance * e0 &&
                  elapsed <= kBalanceSeconds;
  report("energy_balance", ok,
         fmt::format("n = {}, nu = {:g}, T = {:g}, max |residual| {:.3g} (<= {:.3g}), {:.1f} s (<= {:g} s)", config.n,
                     config.nu, config.horizon, worst, kBalanceTolerance * e0, elapsed, kBalanceSeconds));
}

void gronwall_self_test() {
  const auto start = Clock::now();
  testing::ParamGenerator gen(2024);

  double worst_round_trip = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.next();
    const double r = r_star(p) * (1.0 + gen.log_uniform(1e-3, 1e3));
    const double y = capital_phi(r, p);
    const double back = capital_phi(capital_phi_inverse(y, p), p);
    worst_round_trip = std::max(worst_round_trip, std::abs(back - y) / y);
  }

  double worst_representation = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.next();
    const double z_init = r_star(p) * (1.0 + gen.log_uniform(1e-2, 1e2));
    const double tau = capital_phi(z_init, p);
    std::vector<double> times;
    for (int k = 1; k <= 20; ++k) times.push_back(0.2 * tau * k);
    const auto m = supersolution_series(times, z_init, 0.0, p);
    const auto ref = testing::odeint_solve(p, 0.0, z_init, times, 1e-12);
    for (std::size_t k = 0; k < times.size(); ++k) {
      worst_representation = std::max(worst_representation, std::abs(m[k] / ref[k] - 1.0));
    }
  }

  int comparison_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.next();
    const double rs = r_star(p);
    const double z0 = rs * gen.log_uniform(0.1, 10.0);
    const double amp = gen.uniform(0.0, 0.5) * p.B() * std::sqrt(rs), freq = gen.uniform(0.5, 5.0);
    const double horizon = 3.0 * capital_phi(std::max(z0, 1.5 * rs), p);
    std::vector<double> times;
    for (int k = 0; k <= 30; ++k) times.push_back(horizon * k / 30.0);
    const auto z = testing::odeint_solve(p, 0.0, z0, times, [&](double t) { return amp * (1.0 + std::sin(freq * t)); });
    const auto m = supersolution_series(times, z0, 0.0, p);
    std::vector<TimeValue> zs, ms;
    for (std::size_t k = 0; k < times.size(); ++k) {
      zs.push_back({times[k], z[k]});
      ms.push_back({times[k], m[k]});
    }
    if (!comparison_check(zs, ms).holds) ++comparison_failures;
  }

  int tail_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.next();
    if (p.nu() * capital_phi_integral(ExtendedReal::infinity(), p) > step4_tail_majorant(p)) ++tail_failures;
  }

  const double elapsed = seconds_since(start);
  report("gronwall_self_test",
         worst_round_trip <= kRoundTripTolerance && worst_representation <= kRepresentationTolerance &&
             comparison_failures == 0 && tail_failures == 0 && elapsed <= kSelfTestSeconds,
         fmt::format("round trip {:.2g} (<= {:g}), representation vs ODE {:.2g} (<= {:g}), comparison failures "
                     "{}/100, tail majorant failures {}/100, {:.1f} s (<= {:g} s)",
                     worst_round_trip, kRoundTripTolerance, worst_representation, kRepresentationTolerance,
                     comparison_failures, tail_failures, elapsed, kSelfTestSeconds));
}

void below_case_slope() {
  const GronwallConstants constants{1.0, 1.0, 2.0 / (2.0 - 1.5)};
  std::vector<double> x, y;
  for (int k = 1; k <= 5; ++k) {
    const double nu = std::pow(10.0, -k);
    x.push_back(std::log(nu));
    y.push_back(std::log(case_bounds(CaseLabel::Below, 1.0, constants.at(nu), ExtendedReal::finite(1.0))));
  }
  const double slope = fit_line(x, y).slope, expected = 5.0 / 7.0;
  report("below_case_slope", std::abs(slope / expected - 1.0) <= kSlopeTolerance,
         fmt::format("slope {:.6f} vs 5/7 = {:.6f} (relative tolerance {:g})", slope, expected, kSlopeTolerance));
}

void dissipation_sweep(const std::string& config_dir, const std::string& output_dir, LpTally& lp) {
  const std::vector<Setting> overrides{{"run.output", output_dir}};
  const auto config = load_config(config_dir + "/singular_vortex.ini", overrides);
  const std::vector<double> ladder{1e-2, 3e-3, 1e-3, 3e-4};
  const auto start = Clock::now();
  const auto result = sweep(config, ladder, {0, true});
  const double elapsed = seconds_since(start);
  for (const auto& point : result.points) lp.add(point.output);

  std::string values;
  bool bounds_ok = true;
  for (const auto& point : result.points) {
    values += fmt::format(" {:.4g}/{:.4g}", point.measured_dissipation, 2.0 * point.bound);
    bounds_ok = bounds_ok && point.measured_dissipation <= 2.0 * point.bound * (1.0 + kBoundSlack);
  }
  const double d_max = result.points.front().measured_dissipation, d_min = result.points.back().measured_dissipation;
  const bool shape_ok = config.scenario.kind == ScenarioKind::SingularVortex && config.p == 1.5 && config.n == 512 &&
                        config.horizon == 1.0;
  report("dissipation_vanishing",
         shape_ok && result.dissipation_decreasing() && d_min <= kDissipationDrop * d_max && bounds_ok &&
             elapsed <= kSweepSeconds,
         fmt::format("case {}, D/2bound:{}, D(nu_min)/D(nu_max) = {:.3f} (<= {:g}), {:.0f} s (<= {:g} s)",
                     to_string(result.label), values, d_min / d_max, kDissipationDrop, elapsed, kSweepSeconds));

  bool decreasing = result.adjacent_l2.size() == ladder.size() - 1;
  std::string distances;
  for (std::size_t j = 0; j < result.adjacent_l2.size(); ++j) {
    distances += fmt::format(" {:.4g}", result.adjacent_l2[j]);
    if (j > 0 && !(result.adjacent_l2[j] < result.adjacent_l2[j - 1])) decreasing = false;
  }
  report("strong_convergence", decreasing, fmt::format("adjacent L2 distances:{}", distances));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string config_dir = argc > 1 ? argv[1] : VVL_CONFIG_DIR;
  const std::string output_dir = argc > 2 ? argv[2] : "acceptance-out";
  try {
    LpTally lp;
    taylor_green_exactness(lp);
    energy_balance(config_dir, lp);
    gronwall_self_test();
    below_case_slope();
    dissipation_sweep(config_dir, output_dir, lp);
    report("lp_estimate", lp.failures == 0,
           fmt::format("{} runs, {} violations, worst margin {:.3g}", lp.runs, lp.failures, lp.worst_margin));
  } catch (const std::exception& e) {
    report("acceptance_suite", false, fmt::format("aborted: {}", e.what()));
  }
  const auto failed = std::count_if(lines.begin(), lines.end(), [](const Line& l) { return !l.passed; });
  fmt::print("{} of {} criteria passed\n", lines.size() - failed, lines.size());
  return failed == 0 ? 0 : 1;
}

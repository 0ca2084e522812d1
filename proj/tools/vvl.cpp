#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "vvl/harness/bound_table.hpp"
#include "vvl/harness/config.hpp"
#include "vvl/harness/manifest.hpp"
#include "vvl/harness/run.hpp"
#include "vvl/harness/sweep.hpp"
#include "vvl/harness/verify.hpp"

namespace {

constexpr int kExitGateFailure = 1;
constexpr int kExitError = 2;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw CLI::ValidationError("--nu", "expected a comma-separated list of numbers, got '" + text + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Registers --<section>.<key> for every configuration key.
void add_config_flags(CLI::App* app, std::map<std::string, std::string>& values) {
  for (const auto& key : vvl::config_keys()) {
    app->add_option("--" + key, values[key], "override " + key)->group("Config overrides");
  }
}

std::vector<vvl::Setting> collected(const CLI::App* app, const std::map<std::string, std::string>& values) {
  std::vector<vvl::Setting> out;
  for (const auto& [key, value] : values) {
    if (app->count("--" + key) > 0) out.emplace_back(key, value);
  }
  return out;
}

void print_gates(const vvl::RunReport& report) {
  for (const auto& g : report.gates) {
    fmt::print("{:<4} {:<26} value {:<12.5g} threshold {:.5g} {}\n", g.passed ? "PASS" : "FAIL", g.name, g.value,
               g.threshold, g.detail);
  }
  fmt::print("{} samples, {} steps, {:.2f} s\n", report.output.records.size(), report.output.steps,
             report.elapsed_seconds);
}

int run_command(const vvl::SimConfig& config) {
  const auto report = vvl::run_single(config);
  print_gates(report);
  fmt::print("outputs in {}\n", config.output_dir);
  return report.passed() ? 0 : kExitGateFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral 2D Navier-Stokes solver with vanishing-viscosity diagnostics"};
  app.set_version_flag("--version", vvl::version());
  app.require_subcommand(1);

  std::string run_config_path;
  std::map<std::string, std::string> run_values;
  auto* run_cmd = app.add_subcommand("run", "run one configuration and check its invariant gates");
  run_cmd->add_option("config", run_config_path, "configuration file")->required()->check(CLI::ExistingFile);
  add_config_flags(run_cmd, run_values);

  std::string sweep_config_path, sweep_nu;
  unsigned sweep_threads = 0;
  std::map<std::string, std::string> sweep_values;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a configuration across a decreasing viscosity ladder");
  sweep_cmd->add_option("config", sweep_config_path, "configuration file")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--nu", sweep_nu, "comma-separated, strictly decreasing viscosities")->required();
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");
  add_config_flags(sweep_cmd, sweep_values);

  auto* verify_cmd = app.add_subcommand("verify", "run the built-in fixture checks");

  int tg_n = 64;
  double tg_nu = 0.01, tg_T = 1.0, tg_cadence = 0.1;
  std::string tg_output = "vvl-taylor-green";
  auto* tg_cmd = app.add_subcommand("taylor-green", "Taylor-Green run against the exact solution");
  tg_cmd->add_option("--n", tg_n, "grid size")->capture_default_str();
  tg_cmd->add_option("--nu", tg_nu, "viscosity")->capture_default_str();
  tg_cmd->add_option("--T", tg_T, "horizon")->capture_default_str();
  tg_cmd->add_option("--cadence", tg_cadence, "diagnostics spacing")->capture_default_str();
  tg_cmd->add_option("--output", tg_output, "output directory")->capture_default_str();

  double gt_p = 1.5, gt_A = 1.0, gt_B = 1.0, gt_T = 1.0;
  std::string gt_nu, gt_z0 = "inf", gt_out;
  auto* gt_cmd = app.add_subcommand("gronwall-table", "case labels and dissipation bounds along a ladder");
  gt_cmd->add_option("--p", gt_p, "integrability exponent in (1, 2)")->capture_default_str();
  gt_cmd->add_option("--A", gt_A, "dissipation coefficient")->capture_default_str();
  gt_cmd->add_option("--B", gt_B, "forcing coefficient")->capture_default_str();
  gt_cmd->add_option("--nu", gt_nu, "comma-separated, strictly decreasing viscosities")->required();
  gt_cmd->add_option("--z0", gt_z0, "initial enstrophy, or inf")->capture_default_str();
  gt_cmd->add_option("--T", gt_T, "time at which bounds are evaluated")->capture_default_str();
  gt_cmd->add_option("--out", gt_out, "CSV path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      return run_command(vvl::load_config(run_config_path, collected(run_cmd, run_values)));
    }
    if (*sweep_cmd) {
      const auto config = vvl::load_config(sweep_config_path, collected(sweep_cmd, sweep_values));
      const auto ladder = parse_list(sweep_nu);
      const auto result = vvl::sweep(config, ladder, {sweep_threads, true});
      fmt::print("case {}  A {:.6g}  B {:.6g}  alpha {:.6g}  c_gn {:.6g}\n", vvl::to_string(result.label),
                 result.constants.A, result.constants.B, result.constants.alpha, result.c_gn);
      fmt::print("{:>12} {:>14} {:>14} {:>8} {:>10}\n", "nu", "dissipation", "bound", "holds", "comparison");
      for (const auto& p : result.points) {
        fmt::print("{:>12.4g} {:>14.6g} {:>14.6g} {:>8} {:>10}\n", p.nu, p.measured_dissipation, p.bound,
                   p.bound_holds ? "yes" : "no", p.comparison.holds ? "yes" : "no");
      }
      fmt::print("slope {:.6f} (rms residual {:.3g})\n", result.slope, result.slope_residual);
      for (std::size_t i = 0; i < result.adjacent_l2.size(); ++i) {
        fmt::print("|u(nu_{}) - u(nu_{})| = {:.6g}\n", i + 1, i, result.adjacent_l2[i]);
      }
      fmt::print("outputs in {}\n", config.output_dir);
      return result.bounds_hold() && result.comparisons_hold() ? 0 : kExitGateFailure;
    }
    if (*verify_cmd) {
      const auto checks = vvl::verify_suite();
      vvl::print_verify_table(std::cout, checks);
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
      return ok ? 0 : kExitGateFailure;
    }
    if (*tg_cmd) {
      vvl::SimConfig config;
      config.n = tg_n;
      config.nu = tg_nu;
      config.horizon = tg_T;
      config.cadence = tg_cadence;
      config.output_dir = tg_output;
      config.scenario.kind = vvl::ScenarioKind::TaylorGreen;
      config.forcing.kind = vvl::ForcingKind::None;
      return run_command(config);
    }
    if (*gt_cmd) {
      const auto ladder = parse_list(gt_nu);
      const auto z0 = gt_z0 == "inf" ? vvl::ExtendedReal::infinity() : vvl::ExtendedReal::finite(std::stod(gt_z0));
      const auto rows = vvl::gronwall_table(gt_p, gt_A, gt_B, ladder, z0, gt_T);
      if (gt_out.empty()) {
        vvl::write_bound_table(std::cout, rows);
      } else {
        vvl::write_bound_table(gt_out, rows);
      }
      return 0;
    }
  } catch (const vvl::SolverInstability& e) {
    fmt::print(stderr, "error: solver became unstable at t = {:.17g}\n", e.time());
    return kExitError;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitError;
  }
  return kExitError;
}

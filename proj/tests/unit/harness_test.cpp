#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "vvl/diagnostics/csv.hpp"
#include "vvl/harness/bound_table.hpp"
#include "vvl/harness/config.hpp"
#include "vvl/harness/manifest.hpp"
#include "vvl/harness/run.hpp"
#include "vvl/harness/sweep.hpp"

namespace vvl {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("vvl-test-" + name);
  fs::remove_all(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string error_of(const std::string& text, std::span<const Setting> overrides = {}) {
  std::istringstream in(text);
  try {
    parse_config(in, overrides);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

TEST(Config, ParsesSectionsOverDefaults) {
  std::istringstream in(
      "[run]\nn = 64\nnu = 0.002\nT = 2\ncadence = 0.05\n"
      "[scenario]\nkind = power_spectrum\ngamma = 2.5\nseed = 9\n"
      "[forcing]\nkind = low_mode\namplitude = 0.25\n");
  const auto c = parse_config(in);
  EXPECT_EQ(c.n, 64);
  EXPECT_DOUBLE_EQ(c.nu, 0.002);
  EXPECT_DOUBLE_EQ(c.horizon, 2.0);
  EXPECT_EQ(c.scenario.kind, ScenarioKind::PowerSpectrum);
  EXPECT_EQ(c.scenario.seed, 9u);
  EXPECT_EQ(c.forcing.kind, ForcingKind::LowMode);
  EXPECT_DOUBLE_EQ(c.forcing.amplitude, 0.25);
  EXPECT_DOUBLE_EQ(c.p, 1.5);
  EXPECT_DOUBLE_EQ(c.stepper.cfl, 0.4);
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_NE(error_of("[run]\nn = 100\n").find("run.n"), std::string::npos);
  EXPECT_NE(error_of("[run]\nnu = fast\n").find("run.nu"), std::string::npos);
  EXPECT_NE(error_of("[run]\ncadence = 0.5\n").find("run.cadence"), std::string::npos);
  EXPECT_NE(error_of("[forcing]\nstrength = 1\n").find("forcing.strength"), std::string::npos);
  EXPECT_NE(error_of("[scenario]\nkind = sheet\n").find("scenario.kind"), std::string::npos);
  EXPECT_NE(error_of("[run]\nsnapshots = maybe\n").find("run.snapshots"), std::string::npos);
  EXPECT_NE(error_of("n = 64\n").find("section"), std::string::npos);
  EXPECT_NE(error_of("[run\nn = 64\n").find("line"), std::string::npos);
  EXPECT_THROW(load_config("/nonexistent/vvl.ini"), ConfigError);
}

TEST(Config, SingularVortexNeedsResolvableMollifier) {
  const std::string text = "[run]\nn = 32\nnu = 1e-4\n[scenario]\nkind = singular_vortex\n";
  EXPECT_NE(error_of(text).find("scenario.delta_scale"), std::string::npos);
  EXPECT_NE(error_of("[run]\nnu = 0\n[scenario]\nkind = singular_vortex\n").find("run.nu"), std::string::npos);
}

TEST(Config, TextRoundTripsEveryKey) {
  SimConfig c;
  c.n = 256;
  c.nu = 3.25e-4;
  c.horizon = 1.75;
  c.cadence = 1.0 / 3.0 * 1e-2;
  c.output_dir = "some/where";
  c.snapshots = true;
  c.scenario.kind = ScenarioKind::SingularVortex;
  c.scenario.delta_exponent = 0.2;
  c.forcing = {ForcingKind::Rough, 0.125, 1.0, 1.75, -0.5, 2.0, 99};
  c.stepper.cfl = 0.3;
  std::istringstream in(to_config_text(c));
  const auto back = parse_config(in);
  for (const auto& key : config_keys()) EXPECT_EQ(setting_value(back, key), setting_value(c, key)) << key;
  EXPECT_EQ(back.cadence, c.cadence);
  EXPECT_EQ(back.nu, c.nu);
}

TEST(Config, OverridesApplyInOrder) {
  std::istringstream in("[run]\nn = 64\n");
  const std::vector<Setting> overrides{{"run.n", "32"}, {"forcing.kind", "low_mode"}, {"run.n", "16"}};
  const auto c = parse_config(in, overrides);
  EXPECT_EQ(c.n, 16);
  EXPECT_EQ(c.forcing.kind, ForcingKind::LowMode);
  const std::vector<Setting> bad{{"run.size", "32"}};
  EXPECT_NE(error_of("", bad).find("run.size"), std::string::npos);
}

SimConfig taylor_green_config(const fs::path& dir) {
  SimConfig c;
  c.n = 32;
  c.nu = 0.05;
  c.horizon = 1.0;
  // Fine enough that the trapezoid error in the balance stays below 1e-6 E(0).
  c.cadence = 0.02;
  c.output_dir = dir.string();
  return c;
}

const GateResult* find_gate(const std::vector<GateResult>& gates, const std::string& name) {
  for (const auto& g : gates) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

TEST(RunSingle, TaylorGreenPassesItsGatesAndWritesOutputs) {
  const auto dir = scratch_dir("tg");
  auto c = taylor_green_config(dir);
  c.snapshots = true;
  const auto report = run_single(c);
  EXPECT_TRUE(report.passed());
  for (const char* name : {"lp_bound", "energy_balance", "comparison", "taylor_green_energy", "taylor_green_vorticity",
                           "enstrophy_nonincreasing"}) {
    ASSERT_NE(find_gate(report.gates, name), nullptr) << name;
    EXPECT_TRUE(find_gate(report.gates, name)->passed) << name;
  }
  EXPECT_EQ(find_gate(report.gates, "energy_conservation"), nullptr);
  EXPECT_EQ(report.output.records.size(), 51u);
  const auto rows = read_diagnostics_csv((dir / "diagnostics.csv").string());
  EXPECT_EQ(rows.size(), 51u);
  EXPECT_TRUE(fs::exists(dir / "initial.vvf"));
  EXPECT_TRUE(fs::exists(dir / "final.vvf"));
  const auto manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
  EXPECT_EQ(manifest["version"], version());
  EXPECT_TRUE(manifest.contains("config"));
  EXPECT_EQ(manifest["gates"].size(), report.gates.size());
}

TEST(RunSingle, InviscidRunChecksConservation) {
  auto c = taylor_green_config(scratch_dir("inviscid"));
  c.nu = 0.0;
  c.scenario.kind = ScenarioKind::PowerSpectrum;
  c.scenario.target_energy = 1.0;
  const auto report = run_single(c, false);
  ASSERT_NE(find_gate(report.gates, "energy_conservation"), nullptr);
  EXPECT_TRUE(find_gate(report.gates, "energy_conservation")->passed);
  EXPECT_TRUE(find_gate(report.gates, "enstrophy_conservation")->passed);
  EXPECT_EQ(find_gate(report.gates, "comparison"), nullptr);
}

TEST(Gates, DetectTamperedRecords) {
  auto c = taylor_green_config(scratch_dir("tamper"));
  auto report = run_single(c, false);
  auto output = report.output;
  output.records[5].lp_norm *= 1.2;
  output.records[5].balance_residual = 1e-3;
  const auto gates = evaluate_gates(c, output, report.forcing_norms, report.c_gn);
  EXPECT_FALSE(find_gate(gates, "lp_bound")->passed);
  EXPECT_FALSE(find_gate(gates, "energy_balance")->passed);
}

TEST(Gates, ForcedRunBalancesEnergy) {
  auto c = taylor_green_config(scratch_dir("forced"));
  c.scenario.kind = ScenarioKind::PowerSpectrum;
  c.scenario.target_energy = 1.0;
  c.forcing = {ForcingKind::LowMode, 0.5};
  c.cadence = 0.001;
  const auto report = run_single(c, false);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(find_gate(report.gates, "enstrophy_nonincreasing"), nullptr);
  EXPECT_GT(report.output.records.back().cum_work, 0.0);
}

SimConfig sweep_config(const fs::path& dir) {
  SimConfig c;
  c.n = 32;
  c.horizon = 0.5;
  c.cadence = 0.01;
  c.output_dir = dir.string();
  c.scenario.kind = ScenarioKind::PowerSpectrum;
  c.scenario.target_energy = 1.0;
  c.forcing = {ForcingKind::LowMode, 0.5};
  return c;
}

TEST(Sweep, SmallLadderBoundsAndOutputs) {
  const auto dir = scratch_dir("sweep");
  const std::vector<double> ladder{1e-1, 3e-2, 1e-2, 3e-3};
  const auto result = sweep(sweep_config(dir), ladder, {1, true});
  ASSERT_EQ(result.points.size(), 4u);
  EXPECT_TRUE(result.bounds_hold());
  EXPECT_TRUE(result.comparisons_hold());
  EXPECT_TRUE(result.dissipation_decreasing());
  EXPECT_EQ(result.adjacent_l2.size(), 3u);
  EXPECT_GT(result.slope, 0.0);
  EXPECT_TRUE(fs::exists(dir / "bound_table.csv"));
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  std::size_t per_nu = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory() && fs::exists(entry.path() / "diagnostics.csv")) ++per_nu;
  }
  EXPECT_EQ(per_nu, 4u);
  const auto table = read_file(dir / "bound_table.csv");
  EXPECT_EQ(table.substr(0, table.find('\n')), kBoundTableHeader);
  const auto manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
  EXPECT_EQ(manifest["ladder"].size(), 4u);
}

TEST(Sweep, ParallelMatchesSerialByteForByte) {
  const auto serial_dir = scratch_dir("serial"), parallel_dir = scratch_dir("parallel");
  const std::vector<double> ladder{1e-1, 3e-2, 1e-2, 3e-3};
  const auto serial = sweep(sweep_config(serial_dir), ladder, {1, true});
  const auto parallel = sweep(sweep_config(parallel_dir), ladder, {4, true});
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    EXPECT_EQ(serial.points[i].measured_dissipation, parallel.points[i].measured_dissipation);
  }
  EXPECT_EQ(read_file(serial_dir / "bound_table.csv"), read_file(parallel_dir / "bound_table.csv"));
  for (const auto& entry : fs::directory_iterator(serial_dir)) {
    if (!entry.is_directory()) continue;
    const auto name = entry.path().filename();
    EXPECT_EQ(read_file(entry.path() / "diagnostics.csv"), read_file(parallel_dir / name / "diagnostics.csv"));
  }
}

TEST(Sweep, RejectsBadLadders) {
  const auto c = sweep_config(scratch_dir("badladder"));
  EXPECT_THROW(sweep(c, std::vector<double>{1e-1, 1e-2, 1e-3}, {1, false}), std::invalid_argument);
  EXPECT_THROW(sweep(c, std::vector<double>{1e-1, 1e-2, 1e-2, 1e-3}, {1, false}), std::invalid_argument);
}

TEST(BoundTable, GronwallTableRowsAndFormat) {
  const std::vector<double> ladder{1e-1, 1e-2, 1e-3, 1e-4};
  const auto rows = gronwall_table(1.5, 1.0, 1.0, ladder, ExtendedReal::finite(2.0), 1.0);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].label, CaseLabel::Below);
    EXPECT_NEAR(rows[i].bound, ladder[i] * rows[i].r_star, 1e-15 * rows[i].bound);
    EXPECT_FALSE(rows[i].measured_dissipation);
  }
  const auto infinite = gronwall_table(1.5, 1.0, 1.0, ladder, ExtendedReal::infinity(), 1.0);
  EXPECT_EQ(infinite[0].label, CaseLabel::Above);
  std::ostringstream out;
  write_bound_table(out, infinite);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kBoundTableHeader);
  std::getline(lines, line);
  EXPECT_NE(line.find("ABOVE"), std::string::npos);
  EXPECT_NE(line.find("inf"), std::string::npos);
  EXPECT_EQ(line.back(), ',');
}

TEST(FitLine, RecoversExactLineAndResidual) {
  const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const auto fit = fit_line(x, y);
  EXPECT_NEAR(fit.slope, 2.0, 1e-14);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-14);
  EXPECT_NEAR(fit.residual, 0.0, 1e-14);
  const std::vector<double> noisy{0, 1, 0, 1};
  EXPECT_NEAR(fit_line(x, noisy).residual, std::sqrt(0.2), 1e-12);
  EXPECT_THROW(fit_line(std::vector<double>{1.0}, std::vector<double>{1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace vvl

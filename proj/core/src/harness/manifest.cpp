#include "vvl/harness/manifest.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "vvl/harness/run.hpp"
#include "vvl/harness/sweep.hpp"

namespace vvl {

namespace {

using nlohmann::json;

json config_json(const SimConfig& config) {
  json out = json::object();
  for (const auto& key : config_keys()) out[key] = setting_value(config, key);
  return out;
}

json number_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json gates_json(const std::vector<GateResult>& gates) {
  json out = json::array();
  for (const auto& g : gates) {
    out.push_back({{"name", g.name},
                   {"passed", g.passed},
                   {"value", number_or_null(g.value)},
                   {"threshold", number_or_null(g.threshold)},
                   {"detail", g.detail}});
  }
  return out;
}

}  // namespace

std::string version() {
  return VVL_VERSION;
}

std::string run_manifest_json(const RunReport& report) {
  json out;
  out["tool"] = "vvl";
  out["version"] = version();
  out["config"] = config_json(report.config);
  out["samples"] = report.output.records.size();
  out["steps"] = report.output.steps;
  out["c_gn"] = report.c_gn;
  out["forcing_norms"] = {{"linf_l2", report.forcing_norms.linf_l2}, {"l1_lp", report.forcing_norms.l1_lp}};
  out["gates"] = gates_json(report.gates);
  out["passed"] = report.passed();
  out["elapsed_seconds"] = report.elapsed_seconds;
  return out.dump(2) + "\n";
}

std::string sweep_manifest_json(const SweepResult& result) {
  json out;
  out["tool"] = "vvl";
  out["version"] = version();
  out["config"] = config_json(result.base);
  out["ladder"] = result.ladder;
  out["c_gn"] = result.c_gn;
  out["constants"] = {{"A", result.constants.A}, {"B", result.constants.B}, {"alpha", result.constants.alpha}};
  out["case"] = to_string(result.label);
  out["slope"] = {{"value", result.slope}, {"intercept", result.intercept}, {"residual", result.slope_residual}};
  out["adjacent_l2"] = result.adjacent_l2;
  json points = json::array();
  for (const auto& p : result.points) {
    points.push_back({{"nu", p.nu},
                      {"z0", number_or_null(p.z0.to_double())},
                      {"measured_dissipation", p.measured_dissipation},
                      {"bound", p.bound},
                      {"bound_holds", p.bound_holds},
                      {"comparison_holds", p.comparison.holds},
                      {"comparison_worst_ratio", p.comparison.worst_ratio},
                      {"steps", p.output.steps}});
  }
  out["points"] = points;
  out["gates"] = {{"bounds_hold", result.bounds_hold()},
                  {"dissipation_decreasing", result.dissipation_decreasing()},
                  {"comparisons_hold", result.comparisons_hold()}};
  return out.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace vvl

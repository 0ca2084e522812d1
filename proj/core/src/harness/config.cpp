#include "vvl/harness/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "vvl/diagnostics/csv.hpp"

namespace vvl {

namespace {

double to_double_value(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(fmt::format("config field '{}': expected a number, got '{}'", key, text));
  }
  return v;
}

long long to_integer_value(const std::string& key, const std::string& text) {
  long long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(fmt::format("config field '{}': expected an integer, got '{}'", key, text));
  }
  return v;
}

bool to_bool_value(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(fmt::format("config field '{}': expected true or false, got '{}'", key, text));
}

struct Field {
  std::function<void(SimConfig&, const std::string& key, const std::string&)> set;
  std::function<std::string(const SimConfig&)> get;
};

template <typename Member>
Field real_field(Member member) {
  return {[member](SimConfig& c, const std::string& key, const std::string& v) { member(c) = to_double_value(key, v); },
          [member](const SimConfig& c) { return format_double(member(c)); }};
}

template <typename Member>
Field seed_field(Member member) {
  return {[member](SimConfig& c, const std::string& key, const std::string& v) {
            const auto x = to_integer_value(key, v);
            if (x < 0) throw ConfigError(fmt::format("config field '{}': must be non-negative", key));
            member(c) = static_cast<std::uint64_t>(x);
          },
          [member](const SimConfig& c) { return std::to_string(member(c)); }};
}

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = {
      {"run.n",
       {[](SimConfig& c, const std::string& key, const std::string& v) {
          const auto x = to_integer_value(key, v);
          if (x < 8 || x > (1 << 14)) throw ConfigError(fmt::format("config field '{}': out of range", key));
          c.n = static_cast<int>(x);
        },
        [](const SimConfig& c) { return std::to_string(c.n); }}},
      {"run.nu", real_field([](auto& c) -> auto& { return c.nu; })},
      {"run.p",
       {[](SimConfig& c, const std::string& key, const std::string& v) {
          c.p = to_double_value(key, v);
          c.scenario.p = c.p;
        },
        [](const SimConfig& c) { return format_double(c.p); }}},
      {"run.T", real_field([](auto& c) -> auto& { return c.horizon; })},
      {"run.cadence", real_field([](auto& c) -> auto& { return c.cadence; })},
      {"run.output",
       {[](SimConfig& c, const std::string&, const std::string& v) { c.output_dir = v; },
        [](const SimConfig& c) { return c.output_dir; }}},
      {"run.snapshots",
       {[](SimConfig& c, const std::string& key, const std::string& v) { c.snapshots = to_bool_value(key, v); },
        [](const SimConfig& c) { return std::string(c.snapshots ? "true" : "false"); }}},
      {"run.c_gn", real_field([](auto& c) -> auto& { return c.c_gn; })},
      {"scenario.kind",
       {[](SimConfig& c, const std::string&, const std::string& v) { c.scenario.kind = parse_scenario_kind(v); },
        [](const SimConfig& c) { return to_string(c.scenario.kind); }}},
      {"scenario.a", real_field([](auto& c) -> auto& { return c.scenario.a; })},
      {"scenario.delta_scale", real_field([](auto& c) -> auto& { return c.scenario.delta_scale; })},
      {"scenario.delta_exponent", real_field([](auto& c) -> auto& { return c.scenario.delta_exponent; })},
      {"scenario.gamma", real_field([](auto& c) -> auto& { return c.scenario.gamma; })},
      {"scenario.seed", seed_field([](auto& c) -> auto& { return c.scenario.seed; })},
      {"scenario.target_energy", real_field([](auto& c) -> auto& { return c.scenario.target_energy; })},
      {"forcing.kind",
       {[](SimConfig& c, const std::string&, const std::string& v) { c.forcing.kind = parse_forcing_kind(v); },
        [](const SimConfig& c) { return to_string(c.forcing.kind); }}},
      {"forcing.amplitude", real_field([](auto& c) -> auto& { return c.forcing.amplitude; })},
      {"forcing.frequency", real_field([](auto& c) -> auto& { return c.forcing.frequency; })},
      {"forcing.gamma", real_field([](auto& c) -> auto& { return c.forcing.gamma; })},
      {"forcing.drift_x", real_field([](auto& c) -> auto& { return c.forcing.drift_x; })},
      {"forcing.drift_y", real_field([](auto& c) -> auto& { return c.forcing.drift_y; })},
      {"forcing.seed", seed_field([](auto& c) -> auto& { return c.forcing.seed; })},
      {"stepper.cfl", real_field([](auto& c) -> auto& { return c.stepper.cfl; })},
      {"stepper.dt_cap_fraction", real_field([](auto& c) -> auto& { return c.stepper.dt_cap_fraction; })},
  };
  return table;
}

}  // namespace

RunSettings SimConfig::run_settings() const {
  RunSettings s;
  s.horizon = horizon;
  s.cadence = cadence;
  s.p = p;
  s.stepper = stepper;
  return s;
}

void SimConfig::validate() const {
  if (n < 8 || (n & (n - 1)) != 0) throw ConfigError("config field 'run.n': must be a power of two >= 8");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ConfigError("config field 'run.nu': must be finite and >= 0");
  if (!(p > 1.0 && p < 2.0)) throw ConfigError("config field 'run.p': must lie in (1, 2)");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ConfigError("config field 'run.T': must be positive");
  if (!(cadence > 0.0)) throw ConfigError("config field 'run.cadence': must be positive");
  if (std::lround(horizon / cadence) < 10) {
    throw ConfigError("config field 'run.cadence': the run must have at least 10 samples");
  }
  if (!(c_gn >= 0.0)) throw ConfigError("config field 'run.c_gn': must be non-negative");
  if (!(stepper.cfl > 0.0 && stepper.cfl <= 1.0)) throw ConfigError("config field 'stepper.cfl': must lie in (0, 1]");
  if (!(stepper.dt_cap_fraction > 0.0 && stepper.dt_cap_fraction <= 1.0)) {
    throw ConfigError("config field 'stepper.dt_cap_fraction': must lie in (0, 1]");
  }
  if (scenario.p != p) throw ConfigError("config field 'run.p': scenario and run exponents disagree");
  try {
    scenario.validate();
    forcing.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config field ") + e.what());
  }
  if (scenario.kind == ScenarioKind::SingularVortex) {
    if (!(nu > 0.0)) throw ConfigError("config field 'run.nu': singular_vortex needs nu > 0");
    if (scenario.mollify_delta(nu) < 2.0 * 3.14159265358979323846 / n) {
      throw ConfigError("config field 'scenario.delta_scale': mollification width is below the grid spacing");
    }
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, field] : fields()) k.push_back(name);
    return k;
  }();
  return keys;
}

void apply_setting(SimConfig& config, const std::string& key, const std::string& value) {
  const auto it = fields().find(key);
  if (it == fields().end()) throw ConfigError(fmt::format("config field '{}': unknown key", key));
  try {
    it->second.set(config, key, value);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("config field '{}': {}", key, e.what()));
  }
}

std::string setting_value(const SimConfig& config, const std::string& key) {
  const auto it = fields().find(key);
  if (it == fields().end()) throw ConfigError(fmt::format("config field '{}': unknown key", key));
  return it->second.get(config);
}

SimConfig parse_config(std::istream& in, std::span<const Setting> overrides) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(fmt::format("config: line {}: {}", e.line(), e.message()));
  }
  SimConfig config;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) {
      throw ConfigError(fmt::format("config field '{}': keys must live inside a [section]", section));
    }
    for (const auto& [name, value] : body) {
      apply_setting(config, section + "." + name, value.get_value<std::string>());
    }
  }
  for (const auto& [key, value] : overrides) apply_setting(config, key, value);
  config.validate();
  return config;
}

SimConfig load_config(const std::string& path, std::span<const Setting> overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("config: cannot open '{}'", path));
  return parse_config(in, overrides);
}

std::string to_config_text(const SimConfig& config) {
  std::ostringstream out;
  std::string current;
  for (const auto& key : config_keys()) {
    const auto dot = key.find('.');
    const std::string section = key.substr(0, dot);
    if (section != current) {
      if (!current.empty()) out << '\n';
      out << '[' << section << "]\n";
      current = section;
    }
    out << key.substr(dot + 1) << " = " << setting_value(config, key) << '\n';
  }
  return out.str();
}

}  // namespace vvl

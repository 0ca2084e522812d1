#pragma once

#include <string>

namespace vvl {

struct RunReport;
struct SweepResult;

/// Library version string.
std::string version();

/// JSON manifest of a run: config echo, versions, gate results.
std::string run_manifest_json(const RunReport& report);
/// JSON manifest of a sweep: base config, ladder, constants, per-nu results.
std::string sweep_manifest_json(const SweepResult& result);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace vvl

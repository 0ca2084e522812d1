#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vvl/diagnostics/diagnostics.hpp"

namespace vvl {

inline constexpr const char* kDiagnosticsCsvHeader =
    "t,energy,enstrophy,lp_norm,cum_dissipation,cum_work,balance_residual";

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double value);

void write_diagnostics_csv(std::ostream& out, std::span<const DiagnosticsRecord> records);
void write_diagnostics_csv(const std::string& path, std::span<const DiagnosticsRecord> records);

/// Parses a diagnostics CSV; throws std::runtime_error on a header mismatch
/// or malformed row.
std::vector<DiagnosticsRecord> read_diagnostics_csv(std::istream& in);
std::vector<DiagnosticsRecord> read_diagnostics_csv(const std::string& path);

}  // namespace vvl

#include "vvl/diagnostics/csv.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vvl {

std::string format_double(double value) { return fmt::format("{:.17g}", value); }

void write_diagnostics_csv(std::ostream& out, std::span<const DiagnosticsRecord> records) {
  out << kDiagnosticsCsvHeader << '\n';
  for (const auto& r : records) {
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.t, r.energy,
                       r.enstrophy, r.lp_norm, r.cum_dissipation, r.cum_work, r.balance_residual);
  }
}

void write_diagnostics_csv(const std::string& path, std::span<const DiagnosticsRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_diagnostics_csv(out, records);
}

std::vector<DiagnosticsRecord> read_diagnostics_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kDiagnosticsCsvHeader) {
    throw std::runtime_error("diagnostics csv: unexpected header '" + line + "'");
  }
  std::vector<DiagnosticsRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    DiagnosticsRecord r;
    double* fields[] = {&r.t, &r.energy, &r.enstrophy, &r.lp_norm,
                        &r.cum_dissipation, &r.cum_work, &r.balance_residual};
    std::string cell;
    for (double* f : fields) {
      if (!std::getline(row, cell, ',')) {
        throw std::runtime_error("diagnostics csv: short row at line " + std::to_string(lineno));
      }
      try {
        *f = std::stod(cell);
      } catch (const std::exception&) {
        throw std::runtime_error("diagnostics csv: bad number '" + cell + "' at line " +
                                 std::to_string(lineno));
      }
    }
    out.push_back(r);
  }
  return out;
}

std::vector<DiagnosticsRecord> read_diagnostics_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_diagnostics_csv(in);
}

}  // namespace vvl

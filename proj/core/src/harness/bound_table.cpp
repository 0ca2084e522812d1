#include "vvl/harness/bound_table.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "vvl/diagnostics/csv.hpp"

namespace vvl {

void write_bound_table(std::ostream& out, std::span<const BoundRow> rows) {
  out << kBoundTableHeader << '\n';
  for (const auto& row : rows) {
    out << format_double(row.nu) << ',' << to_string(row.label) << ',' << format_double(row.r_star) << ','
        << format_double(row.r_star_star) << ',' << format_double(row.z0.to_double()) << ','
        << format_double(row.bound) << ',';
    if (row.measured_dissipation) out << format_double(*row.measured_dissipation);
    out << '\n';
  }
}

void write_bound_table(const std::string& path, std::span<const BoundRow> rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write bound table '" + path + "'");
  write_bound_table(out, rows);
}

std::vector<BoundRow> gronwall_table(double p, double A, double B, std::span<const double> ladder,
                                     const ExtendedReal& z0, double t) {
  if (ladder.empty()) throw std::invalid_argument("gronwall_table: empty nu ladder");
  const double alpha = 2.0 / (2.0 - p);
  std::vector<LadderPoint> points;
  for (double nu : ladder) points.push_back({nu, z0});

  std::vector<CaseLabel> labels;
  if (points.size() >= 3) {
    labels.assign(points.size(), classify_case(points, A, B, alpha));
  } else {
    for (double ratio : case_ratios(points, A, B, alpha)) {
      labels.push_back(ratio < 1.0 - kCaseMargin   ? CaseLabel::Below
                       : ratio <= 1.0 + kCaseMargin ? CaseLabel::Critical
                                                    : CaseLabel::Above);
    }
  }

  std::vector<BoundRow> rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto params = GronwallParams::from_p(p, A, B, points[i].nu);
    BoundRow row;
    row.nu = points[i].nu;
    row.label = labels[i];
    row.r_star = r_star(params);
    row.r_star_star = r_star_star(params);
    row.z0 = z0;
    row.bound = case_bounds(labels[i], t, params, z0);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace vvl

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vvl/gronwall/gronwall.hpp"

namespace vvl {

inline constexpr const char* kBoundTableHeader = "nu,case,r_star,r_star_star,z0,bound,measured_dissipation";

struct BoundRow {
  double nu = 0.0;
  CaseLabel label = CaseLabel::Below;
  double r_star = 0.0;
  double r_star_star = 0.0;
  ExtendedReal z0 = ExtendedReal::infinity();
  double bound = 0.0;
  /// Empty when no simulation backs the row.
  std::optional<double> measured_dissipation;
};

void write_bound_table(std::ostream& out, std::span<const BoundRow> rows);
void write_bound_table(const std::string& path, std::span<const BoundRow> rows);

/// Case label and bound at time t for each nu of a decreasing ladder with
/// the same z0. Ladders of 3 or more points are classified as a whole;
/// shorter ones point by point with the same margin rule.
std::vector<BoundRow> gronwall_table(double p, double A, double B, std::span<const double> ladder,
                                     const ExtendedReal& z0, double t);

}  // namespace vvl

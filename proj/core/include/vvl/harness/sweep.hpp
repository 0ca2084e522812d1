#pragma once

#include <span>
#include <vector>

#include "vvl/harness/bound_table.hpp"
#include "vvl/harness/run.hpp"

namespace vvl {

struct SweepPoint {
  double nu = 0.0;
  RunOutput output;
  ForcingNorms forcing_norms;
  ExtendedReal z0 = ExtendedReal::infinity();
  /// 2 nu int_0^T |omega|^2 at the horizon.
  double measured_dissipation = 0.0;
  /// Case bound on nu int_0^T z at t = T.
  double bound = 0.0;
  double r_star = 0.0;
  double r_star_star = 0.0;
  ComparisonResult comparison;
  /// measured_dissipation <= 2 bound (1 + 1e-3).
  bool bound_holds = false;
};

struct SweepResult {
  SimConfig base;
  std::vector<double> ladder;
  std::vector<SweepPoint> points;
  double c_gn = 0.0;
  GronwallConstants constants{};
  CaseLabel label = CaseLabel::Below;
  /// Least-squares fit log D = slope log nu + intercept, with the RMS residual.
  double slope = 0.0;
  double intercept = 0.0;
  double slope_residual = 0.0;
  /// |u(nu_{j+1}, T) - u(nu_j, T)|_{L2} for adjacent ladder entries.
  std::vector<double> adjacent_l2;

  bool bounds_hold() const;
  bool dissipation_decreasing() const;
  bool comparisons_hold() const;
  std::vector<BoundRow> bound_rows() const;
};

struct SweepOptions {
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
  bool write_outputs = true;
};

/// Ordinary least squares y = slope x + intercept; returns {slope, intercept, rms residual}.
struct LineFit {
  double slope;
  double intercept;
  double residual;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Runs `base` at every nu of a strictly decreasing ladder (at least 4
/// points) on a pool of workers, then estimates the Gronwall constants from
/// the sup of the measured norms, classifies the ladder and evaluates the
/// case bound at t = T per nu. With write_outputs, per-nu diagnostics, the
/// bound table and a manifest land in base.output_dir; if a run fails the
/// completed runs are still written before the error propagates.
SweepResult sweep(const SimConfig& base, std::span<const double> ladder, const SweepOptions& options = {});

}  // namespace vvl

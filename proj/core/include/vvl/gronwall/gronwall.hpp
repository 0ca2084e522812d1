#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vvl/gronwall/extended_real.hpp"
#include "vvl/gronwall/params.hpp"

namespace vvl {

/// Default relative accuracy of capital_phi.
inline constexpr double kCapitalPhiTolerance = 1e-10;

/// Phi(r) = -int_r^inf d rho / phi(rho) for r > R*.
///
/// The integral runs in the variable u = log((rho - R*)/R*) (log rho when
/// B = 0), which turns the logarithmic blow-up at R* into a flat integrand.
/// Adaptive Gauss-Kronrod covers [r, R_big]; R_big is picked so that the
/// tail bound 2/(A nu (alpha-1) R_big^(alpha-1)) is below `rel_tol` relative
/// to Phi(r), and the tail itself is added through its convergent power
/// series in R*/rho. Throws std::invalid_argument for r <= R*.
double capital_phi(double r, const GronwallParams& params, double rel_tol = kCapitalPhiTolerance);

/// Phi(z) with Phi(+inf) = 0.
double capital_phi(const ExtendedReal& r, const GronwallParams& params,
                   double rel_tol = kCapitalPhiTolerance);

/// r > R* with Phi(r) = y, found by Brent iteration in log(r - R*) on a
/// bracket grown geometrically from R**, to a relative residual of 1e-11.
/// y <= 0 maps to +inf.
ExtendedReal capital_phi_inverse(double y, const GronwallParams& params);

/// Solution at time t of m' = phi(m), m(delta) = z_init.
///  - z_init > R*: Phi^-1[t - delta + Phi(z_init)] (Phi(+inf) = 0);
///  - z_init = R*: R*;
///  - z_init < R*: adaptive Dormand-Prince integration, increasing toward R*.
/// Throws std::invalid_argument for t < delta or non-positive z_init.
ExtendedReal supersolution_m(double t, const ExtendedReal& z_init, double delta,
                             const GronwallParams& params);

/// m at several times (all >= delta), sharing one ODE solve when z_init < R*.
std::vector<double> supersolution_series(std::span<const double> times, double z_init, double delta,
                                         const GronwallParams& params);

struct TimeValue {
  double t;
  double value;
};

struct ComparisonResult {
  bool holds = true;
  std::optional<std::size_t> first_violation;
  /// max over samples of z/m (0 when every m is infinite).
  double worst_ratio = 0.0;
};

/// z(t) <= m(t) (1 + 1e-6) at every sample. Time grids must agree.
ComparisonResult comparison_check(std::span<const TimeValue> z_series, std::span<const TimeValue> m_series);

/// int_{R**}^{z0} Phi(y) dy, evaluated as the single integral
/// int_{R**}^inf (min(rho, z0) - R**) / (-phi(rho)) d rho. Requires B > 0, z0 > R**.
double capital_phi_integral(const ExtendedReal& z0, const GronwallParams& params);

/// nu [ int_{R**}^{z0} Phi + t R** + R** Phi(z0) ], the bound on nu int_0^t z.
/// Requires t > 0, B > 0 and z0 > R** (the BELOW / CRITICAL bounds cover the rest).
double dissipation_bound_step4(double t, const ExtendedReal& z0, const GronwallParams& params);

/// Closed-form majorant 2 / (A (alpha-1)(alpha-2)) R**^(2-alpha) of
/// nu int_{R**}^{z0} Phi.
double step4_tail_majorant(const GronwallParams& params);

/// nu int_0^t m(s) ds for B = 0, where m solves m' = -A nu m^alpha from z0.
double unforced_dissipation_bound(double t, const ExtendedReal& z0, const GronwallParams& params);

struct LadderPoint {
  double nu;
  ExtendedReal z0;
};

inline constexpr double kCaseMargin = 0.05;

/// Finite-ladder proxy for limsup z0/R*_nu: the max of the ratio over the
/// last third of the (strictly decreasing) ladder is compared with 1 +- margin.
/// Throws std::invalid_argument for fewer than 3 points or a non-decreasing ladder.
CaseLabel classify_case(std::span<const LadderPoint> ladder, double A, double B, double alpha,
                        double margin = kCaseMargin);

/// z0 / R*_nu for each ladder point (+inf when z0 is infinite or R* = 0).
std::vector<double> case_ratios(std::span<const LadderPoint> ladder, double A, double B, double alpha);

/// Upper bound on nu int_0^t z for a case:
///   BELOW -> nu t R*, CRITICAL -> 2 nu t R*,
///   ABOVE -> dissipation_bound_step4 when z0 > R**, 2 nu t R* when
///            R* < z0 <= R** (then z stays below 2R*), and the exact
///            unforced integral when B = 0.
double case_bounds(CaseLabel label, double t, const GronwallParams& params, const ExtendedReal& z0);

/// nu-independent part of GronwallParams.
struct GronwallConstants {
  double A;
  double B;
  double alpha;
  GronwallParams at(double nu) const { return {A, B, alpha, nu}; }
};

/// alpha = 2/(2-p), A = 2 c_gn (omega0_lp_sup + g_l1lp_sup)^(-2p/(2-p)),
/// B = 2 g_linfl2_sup. Throws for p outside (1, 2), c_gn <= 0,
/// omega0_lp_sup + g_l1lp_sup <= 0 or negative norms.
GronwallConstants estimate_params(double p, double omega0_lp_sup, double g_l1lp_sup,
                                  double g_linfl2_sup, double c_gn);

}  // namespace vvl

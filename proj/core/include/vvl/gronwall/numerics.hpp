#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

/// Scalar numerical kernels behind the comparison machinery.
namespace vvl::numerics {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;       ///< estimated absolute error
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on a finite interval [a, b].
/// Bisects the interval with the largest error estimate until the summed
/// estimate is below max(abs_tol, rel_tol * |value|) or `max_intervals`
/// subintervals exist.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-12, double abs_tol = 0.0,
                           std::size_t max_intervals = 4000);

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Brent's method on a bracket with f(lo) and f(hi) of opposite sign (or one
/// of them zero). Stops when |f| <= f_tol or the bracket shrinks below x_tol.
/// Throws std::invalid_argument if the bracket does not straddle a root.
RootResult brent(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                 double f_tol, std::size_t max_iterations = 200);

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 0.0;   ///< 0 picks a step from the initial slope
  std::size_t max_steps = 1000000;
};

/// Adaptive Dormand-Prince 5(4) for the scalar autonomous ODE y' = f(y),
/// returning y at each of the non-decreasing `times` (all >= t0). Throws
/// std::runtime_error when the step count is exhausted or the step underflows.
std::vector<double> integrate_ode(const std::function<double(double)>& f, double t0, double y0,
                                  std::span<const double> times, const OdeOptions& options = {});

}  // namespace vvl::numerics

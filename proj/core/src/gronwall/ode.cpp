#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vvl/gronwall/numerics.hpp"

namespace vvl::numerics {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

}  // namespace

std::vector<double> integrate_ode(const std::function<double(double)>& f, double t0, double y0,
                                  std::span<const double> times, const OdeOptions& options) {
  std::vector<double> out;
  out.reserve(times.size());
  double t = t0;
  double y = y0;
  double k1 = f(y);
  double h = options.initial_step;
  if (!(h > 0.0)) {
    const double scale = options.abs_tol + options.rel_tol * std::abs(y);
    h = std::abs(k1) > 0.0 ? 0.01 * scale / std::abs(k1) : 1e-3;
    h = std::max(h, 1e-12);
  }
  std::size_t steps = 0;

  for (double target : times) {
    if (target < t) throw std::invalid_argument("integrate_ode: output times must be non-decreasing");
    while (t < target) {
      if (++steps > options.max_steps) throw std::runtime_error("integrate_ode: step budget exhausted");
      const bool last = h >= target - t;
      const double step = last ? target - t : h;
      const double k2 = f(y + step * a21 * k1);
      const double k3 = f(y + step * (a31 * k1 + a32 * k2));
      const double k4 = f(y + step * (a41 * k1 + a42 * k2 + a43 * k3));
      const double k5 = f(y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const double k6 = f(y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const double y_new = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const double k7 = f(y_new);
      const double err_abs = std::abs(step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
      const double scale = options.abs_tol + options.rel_tol * std::max(std::abs(y), std::abs(y_new));
      const double err = std::isfinite(err_abs) ? err_abs / scale : 1e10;
      const double grow = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      if (err <= 1.0) {
        t = last ? target : t + step;
        y = y_new;
        k1 = k7;
        if (!last || grow < 1.0) h = step * grow;
      } else {
        h = step * grow;
      }
      if (!(h > 1e-300)) throw std::runtime_error("integrate_ode: step size underflow");
    }
    out.push_back(y);
  }
  return out;
}

}  // namespace vvl::numerics

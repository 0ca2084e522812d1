#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "vvl/gronwall/gronwall.hpp"
#include "vvl/gronwall/numerics.hpp"

namespace vvl {

namespace {

// sum_j x^j / (offset + j * step) for 0 <= x < 1.
double power_series(double x, double offset, double step) {
  double sum = 0.0;
  double xj = 1.0;
  for (int j = 0; j < 10000; ++j) {
    const double term = xj / (offset + j * step);
    sum += term;
    if (term <= 1e-17 * sum) break;
    xj *= x;
  }
  return sum;
}

// Phi for B > 0 in the variable u = log((rho - R*)/R*). With eta = e^u,
//   d rho / (-phi(rho)) = (sqrt(R*)/B) * eta / (sqrt(1+eta) ((1+eta)^beta - 1)) du,
// beta = alpha - 1/2, using A nu R*^alpha = B sqrt(R*).
struct ForcedPhi {
  explicit ForcedPhi(const GronwallParams& params)
      : alpha(params.alpha()),
        beta(params.alpha() - 0.5),
        rs(r_star(params)),
        rss(r_star_star(params)),
        scale(std::sqrt(rs) / params.B()) {}

  double integrand(double u) const {
    const double eta = std::exp(u);
    const double growth = std::expm1(beta * std::log1p(eta));
    if (!std::isfinite(growth)) return 0.0;
    return eta / (std::sqrt(1.0 + eta) * growth);
  }

  // int_{R*(1+eta)}^inf d rho/(-phi) via 1/(1 - (R*/rho)^beta) = sum (R*/rho)^(j beta).
  double tail(double eta) const {
    const double w = 1.0 + eta;
    return scale * std::pow(w, 1.0 - alpha) * power_series(std::pow(w, -beta), alpha - 1.0, beta);
  }

  double at_u(double u, double rel_tol) const {
    const double r = rs * (1.0 + std::exp(u));
    const double r_big = std::max(r * std::pow(2.0 / rel_tol, 1.0 / (alpha - 1.0)), 2.0 * rss);
    const double eta_big = r_big / rs - 1.0;
    const double u_big = std::log(eta_big);
    const auto q = numerics::integrate([this](double s) { return integrand(s); }, u, u_big, 0.1 * rel_tol);
    return scale * q.value + tail(eta_big);
  }

  double alpha, beta, rs, rss, scale;
};

// B = 0: Phi(r) = r^(1-alpha) / (A nu (alpha - 1)), integrated in u = log(rho/r).
double unforced_phi(double r, const GronwallParams& params, double rel_tol) {
  const double alpha = params.alpha();
  const double lead = std::pow(r, 1.0 - alpha) / (params.A() * params.nu());
  const double u_big = std::log(2.0 / rel_tol) / (alpha - 1.0);
  const auto q = numerics::integrate([alpha](double u) { return std::exp((1.0 - alpha) * u); }, 0.0,
                                     u_big, 0.1 * rel_tol);
  return lead * (q.value + std::exp((1.0 - alpha) * u_big) / (alpha - 1.0));
}

bool near_r_star(double z, double rs) {
  return std::abs(z - rs) <= 1e-14 * rs;
}

}  // namespace

double capital_phi(double r, const GronwallParams& params, double rel_tol) {
  const double rs = r_star(params);
  if (!(r > rs)) throw std::invalid_argument("capital_phi: r must exceed R* (the integral diverges)");
  if (!std::isfinite(r)) return 0.0;
  if (params.B() == 0.0) return unforced_phi(r, params, rel_tol);
  const ForcedPhi f(params);
  return f.at_u(std::log((r - rs) / rs), rel_tol);
}

double capital_phi(const ExtendedReal& r, const GronwallParams& params, double rel_tol) {
  if (r.is_infinite()) return 0.0;
  return capital_phi(r.value(), params, rel_tol);
}

ExtendedReal capital_phi_inverse(double y, const GronwallParams& params) {
  if (!(y > 0.0)) return ExtendedReal::infinity();
  constexpr double kInnerTol = 1e-13;
  const double f_tol = 1e-11 * y;

  // x is log(r - R*) normalized by R* (log r when B = 0); Phi decreases in x.
  std::function<double(double)> residual;
  std::function<double(double)> to_r;
  double x0;
  if (params.B() == 0.0) {
    residual = [&](double x) { return unforced_phi(std::exp(x), params, kInnerTol) - y; };
    to_r = [](double x) { return std::exp(x); };
    x0 = 0.0;
  } else {
    const ForcedPhi f(params);
    residual = [f, y](double x) { return f.at_u(x, kInnerTol) - y; };
    const double rs = f.rs;
    to_r = [rs](double x) { return rs * (1.0 + std::exp(x)); };
    x0 = std::log(f.rss / f.rs - 1.0);
  }

  double lo = x0, hi = x0;
  double f0 = residual(x0);
  if (std::abs(f0) <= f_tol) return ExtendedReal::finite(to_r(x0));
  double step = 1.0;
  if (f0 > 0.0) {
    // Phi too large: move outward.
    double fhi = f0;
    while (fhi > 0.0) {
      lo = hi;
      hi += step;
      step *= 2.0;
      fhi = residual(hi);
      if (hi > 700.0) throw std::runtime_error("capital_phi_inverse: bracket search overflowed");
    }
  } else {
    double flo = f0;
    while (flo < 0.0) {
      hi = lo;
      lo -= step;
      step *= 2.0;
      flo = residual(lo);
      if (lo < -1e12) throw std::runtime_error("capital_phi_inverse: bracket search underflowed");
    }
  }
  const auto root = numerics::brent(residual, lo, hi, 1e-15 * std::max(1.0, std::abs(lo)), f_tol);
  return ExtendedReal::finite(to_r(root.root));
}

std::vector<double> supersolution_series(std::span<const double> times, double z_init, double delta,
                                         const GronwallParams& params) {
  if (!(z_init > 0.0)) throw std::invalid_argument("supersolution_m: z_init must be positive");
  if (!(delta >= 0.0)) throw std::invalid_argument("supersolution_m: delta must be non-negative");
  for (double t : times) {
    if (t < delta) throw std::invalid_argument("supersolution_m: t must be >= delta");
  }
  const double rs = r_star(params);
  std::vector<double> out;
  out.reserve(times.size());
  if (params.B() > 0.0 && near_r_star(z_init, rs)) {
    out.assign(times.size(), rs);
    return out;
  }
  if (z_init > rs) {
    const double phi0 = capital_phi(z_init, params);
    for (double t : times) {
      if (t == delta) {
        out.push_back(z_init);
        continue;
      }
      out.push_back(capital_phi_inverse(t - delta + phi0, params).value());
    }
    return out;
  }
  // Below R*: m increases monotonically toward R*.
  std::vector<double> sorted(times.begin(), times.end());
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    throw std::invalid_argument("supersolution_m: times must be sorted");
  }
  numerics::OdeOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-14 * rs;
  auto rhs = [&params](double m) { return phi(std::max(m, 0.0), params); };
  out = numerics::integrate_ode(rhs, delta, z_init, sorted, opts);
  for (double& m : out) m = std::clamp(m, z_init, rs);
  return out;
}

ExtendedReal supersolution_m(double t, const ExtendedReal& z_init, double delta,
                             const GronwallParams& params) {
  if (t < delta) throw std::invalid_argument("supersolution_m: t must be >= delta");
  if (z_init.is_infinite()) return capital_phi_inverse(t - delta, params);
  const double times[] = {t};
  return ExtendedReal::finite(supersolution_series(times, z_init.value(), delta, params).front());
}

ComparisonResult comparison_check(std::span<const TimeValue> z_series, std::span<const TimeValue> m_series) {
  if (z_series.size() != m_series.size()) {
    throw std::invalid_argument("comparison_check: series lengths differ");
  }
  ComparisonResult result;
  for (std::size_t i = 0; i < z_series.size(); ++i) {
    const double tz = z_series[i].t, tm = m_series[i].t;
    if (std::abs(tz - tm) > 1e-12 * std::max(1.0, std::abs(tz))) {
      throw std::invalid_argument("comparison_check: time grids are not aligned");
    }
    const double z = z_series[i].value, m = m_series[i].value;
    if (std::isinf(m)) continue;
    result.worst_ratio = std::max(result.worst_ratio, m > 0.0 ? z / m : (z > 0.0 ? INFINITY : 0.0));
    if (z > m * (1.0 + 1e-6) && result.holds) {
      result.holds = false;
      result.first_violation = i;
    }
  }
  return result;
}

}  // namespace vvl

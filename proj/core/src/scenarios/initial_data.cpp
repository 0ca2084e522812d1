#include "vvl/scenarios/initial_data.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "vvl/diagnostics/diagnostics.hpp"
#include "vvl/gronwall/numerics.hpp"

namespace vvl {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TaylorGreen taylor_green(const Grid& grid, double nu, double t) {
  const double decay = std::exp(-2.0 * nu * t);
  // 2 sin x sin y = -(1/2)(e^{i(x+y)} - e^{i(x-y)} - e^{-i(x-y)} + e^{-i(x+y)}).
  SpectralField omega(grid);
  omega.set_mode(1, 1, -0.5 * decay);
  omega.set_mode(1, -1, 0.5 * decay);
  // sin x cos y = (1/4i)(e^{i(x+y)} + e^{i(x-y)} - c.c.)
  SpectralField ux(grid), uy(grid);
  const Complex quarter_i(0.0, -0.25 * decay);
  ux.set_mode(1, 1, quarter_i);
  ux.set_mode(1, -1, quarter_i);
  // -cos x sin y = -(1/4i)(e^{i(x+y)} - e^{i(x-y)} - c.c.)
  uy.set_mode(1, 1, -quarter_i);
  uy.set_mode(1, -1, quarter_i);
  return {std::move(omega), {std::move(ux), std::move(uy)}, 2.0 * kPi * kPi * decay * decay};
}

double radial_cutoff(double r) {
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  const double s = 2.0 * r - 1.0;
  return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double singular_profile_hankel(double kappa, double a) {
  if (!(a >= 0.0 && a < 2.0)) throw std::invalid_argument("singular_profile_hankel: a must lie in [0, 2)");
  const double e = 2.0 - a;
  auto f = [kappa, e](double s) {
    const double r = std::pow(s, 1.0 / e);
    return radial_cutoff(r) * std::cyl_bessel_j(0.0, kappa * r) / e;
  };
  const double split = std::pow(0.5, e);
  const auto inner = numerics::integrate(f, 0.0, split, 1e-11, 1e-15);
  const auto outer = numerics::integrate(f, split, 1.0, 1e-11, 1e-15);
  return inner.value + outer.value;
}

SpectralField singular_vortex(const Grid& grid, double p, double a, double mollify_delta) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("singular_vortex: p must lie in (1, 2)");
  if (!(a >= 1.0 && a < 2.0 / p)) throw std::invalid_argument("singular_vortex: a must lie in [1, 2/p)");
  if (!(mollify_delta >= grid.spacing())) {
    throw std::invalid_argument("singular_vortex: mollify_delta must be at least the grid spacing");
  }
  // Gaussian weights below this are dropped.
  const double k2_max = 2.0 * std::log(1e18) / (mollify_delta * mollify_delta);
  const int m = grid.retained_max();
  std::vector<double> cache(static_cast<std::size_t>(2 * m * m) + 1, std::numeric_limits<double>::quiet_NaN());
  SpectralField omega(grid);
  for (int row = 0; row < grid.n(); ++row) {
    const int ky = grid.wavenumber(row);
    for (int kx = 0; kx < grid.columns(); ++kx) {
      if ((kx == 0 && ky == 0) || !grid.retained(kx, ky)) continue;
      const int k2 = kx * kx + ky * ky;
      if (k2 > k2_max) continue;
      double& h = cache[static_cast<std::size_t>(k2)];
      if (std::isnan(h)) h = singular_profile_hankel(std::sqrt(static_cast<double>(k2)), a);
      const double shift = ((kx + ky) % 2 == 0) ? 1.0 : -1.0;  // exp(-i k.(pi, pi))
      const double weight = std::exp(-0.5 * mollify_delta * mollify_delta * k2);
      omega.at(row, kx) = h * shift * weight / (2.0 * kPi);
    }
  }
  omega.enforce_hermitian();
  return omega;
}

SpectralField power_spectrum_vorticity(const Grid& grid, double gamma, std::uint64_t seed, double target_energy) {
  if (!std::isfinite(gamma)) throw std::invalid_argument("power_spectrum_vorticity: gamma must be finite");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  SpectralField omega(grid);
  for (int row = 0; row < grid.n(); ++row) {
    const int ky = grid.wavenumber(row);
    for (int kx = 0; kx < grid.columns(); ++kx) {
      const double theta = phase(rng);
      if (!grid.retained(kx, ky) || (kx == 0 && ky <= 0)) continue;
      const double modulus = std::pow(static_cast<double>(kx * kx + ky * ky), -0.5 * gamma);
      omega.set_mode(kx, ky, std::polar(modulus, theta));
    }
  }
  if (target_energy > 0.0) omega *= std::sqrt(target_energy / kinetic_energy(omega));
  return omega;
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::TaylorGreen: return "taylor_green";
    case ScenarioKind::SingularVortex: return "singular_vortex";
    case ScenarioKind::PowerSpectrum: return "power_spectrum";
  }
  return "?";
}

ScenarioKind parse_scenario_kind(const std::string& text) {
  if (text == "taylor_green") return ScenarioKind::TaylorGreen;
  if (text == "singular_vortex") return ScenarioKind::SingularVortex;
  if (text == "power_spectrum") return ScenarioKind::PowerSpectrum;
  throw std::invalid_argument("unknown scenario '" + text + "'");
}

double ScenarioSpec::singularity_exponent() const {
  return a > 0.0 ? a : 0.5 * (1.0 + 2.0 / p);
}

double ScenarioSpec::mollify_delta(double nu) const {
  return delta_scale * std::pow(nu, delta_exponent);
}

void ScenarioSpec::validate() const {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("scenario.p: must lie in (1, 2)");
  if (kind == ScenarioKind::SingularVortex) {
    const double s = singularity_exponent();
    if (!(s >= 1.0 && s < 2.0 / p)) throw std::invalid_argument("scenario.a: must lie in [1, 2/p)");
    if (!(delta_scale > 0.0)) throw std::invalid_argument("scenario.delta_scale: must be positive");
    if (!(delta_exponent > 0.0)) throw std::invalid_argument("scenario.delta_exponent: must be positive");
  }
  if (kind == ScenarioKind::PowerSpectrum) {
    if (!std::isfinite(gamma)) throw std::invalid_argument("scenario.gamma: must be finite");
    if (!(target_energy >= 0.0)) throw std::invalid_argument("scenario.target_energy: must be non-negative");
  }
}

SpectralField make_initial_vorticity(const ScenarioSpec& spec, const Grid& grid, double nu) {
  spec.validate();
  switch (spec.kind) {
    case ScenarioKind::TaylorGreen:
      return taylor_green(grid, nu, 0.0).omega;
    case ScenarioKind::SingularVortex:
      if (!(nu > 0.0)) throw std::invalid_argument("singular_vortex: the mollification schedule needs nu > 0");
      return singular_vortex(grid, spec.p, spec.singularity_exponent(), spec.mollify_delta(nu));
    case ScenarioKind::PowerSpectrum:
      return power_spectrum_vorticity(grid, spec.gamma, spec.seed, spec.target_energy);
  }
  throw std::invalid_argument("scenario.kind: unknown scenario");
}

}  // namespace vvl

#pragma once

#include <cstdint>
#include <string>

#include "vvl/spectral/spectral_field.hpp"

namespace vvl {

struct TaylorGreen {
  SpectralField omega;
  VectorField u;
  double energy;
};

/// omega = 2 e^{-2 nu t} sin x sin y, u = e^{-2 nu t} (sin x cos y, -cos x sin y),
/// |u|^2 = 2 pi^2 e^{-4 nu t}. An exact solution of the unforced equations.
TaylorGreen taylor_green(const Grid& grid, double nu, double t);

/// C^2 radial cutoff: 1 on [0, 1/2], 0 on [1, inf), quintic smoothstep between.
double radial_cutoff(double r);

/// Hankel transform H(kappa) = int_0^1 cutoff(r) r^(1-a) J0(kappa r) dr,
/// integrated in s = r^(2-a) where the integrand is bounded.
double singular_profile_hankel(double kappa, double a);

/// |x - x0|^(-a) cutoff(|x - x0|) with x0 = (pi, pi), convolved with a Gaussian
/// of standard deviation `mollify_delta`, mean removed and restricted to the
/// two-thirds band. Built directly in Fourier space. Requires 1 <= a < 2/p
/// and mollify_delta >= the grid spacing.
SpectralField singular_vortex(const Grid& grid, double p, double a, double mollify_delta);

/// Random phases with |omega(k)| proportional to |k|^(-gamma) on the
/// two-thirds band; deterministic in `seed`. With target_energy > 0 the field
/// is rescaled to that kinetic energy, otherwise the modulus is exactly |k|^(-gamma).
SpectralField power_spectrum_vorticity(const Grid& grid, double gamma, std::uint64_t seed,
                                       double target_energy = 0.0);

enum class ScenarioKind { TaylorGreen, SingularVortex, PowerSpectrum };

std::string to_string(ScenarioKind kind);
/// Accepts taylor_green / singular_vortex / power_spectrum.
ScenarioKind parse_scenario_kind(const std::string& text);

/// Initial-vorticity family with its nu-dependent mollification schedule
/// delta(nu) = delta_scale * nu^delta_exponent.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::TaylorGreen;
  double p = 1.5;
  /// Singularity exponent; <= 0 selects the midpoint (1 + 2/p)/2.
  double a = 0.0;
  double delta_scale = 1.0;
  double delta_exponent = 0.25;
  double gamma = 2.0;
  std::uint64_t seed = 1;
  double target_energy = 0.0;

  double singularity_exponent() const;
  double mollify_delta(double nu) const;
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// omega_0^nu for this family.
SpectralField make_initial_vorticity(const ScenarioSpec& spec, const Grid& grid, double nu);

}  // namespace vvl

#include "vvl/scenarios/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vvl/diagnostics/diagnostics.hpp"
#include "vvl/scenarios/initial_data.hpp"
#include "vvl/spectral/transform.hpp"

namespace vvl {

std::string to_string(ForcingKind kind) {
  switch (kind) {
    case ForcingKind::None: return "none";
    case ForcingKind::LowMode: return "low_mode";
    case ForcingKind::Rough: return "rough";
  }
  return "?";
}

ForcingKind parse_forcing_kind(const std::string& text) {
  if (text == "none") return ForcingKind::None;
  if (text == "low_mode") return ForcingKind::LowMode;
  if (text == "rough") return ForcingKind::Rough;
  throw std::invalid_argument("unknown forcing '" + text + "'");
}

void ForcingSpec::validate() const {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("forcing.amplitude: must be finite and non-negative");
  }
  if (!std::isfinite(frequency)) throw std::invalid_argument("forcing.frequency: must be finite");
  if (!std::isfinite(gamma)) throw std::invalid_argument("forcing.gamma: must be finite");
  if (!std::isfinite(drift_x)) throw std::invalid_argument("forcing.drift_x: must be finite");
  if (!std::isfinite(drift_y)) throw std::invalid_argument("forcing.drift_y: must be finite");
}

Forcing::Forcing(const ForcingSpec& spec, const Grid& grid) : spec_(spec), grid_(grid) {
  spec_.validate();
  if (spec_.kind == ForcingKind::Rough) {
    SpectralField g0 = power_spectrum_vorticity(grid_, spec_.gamma, spec_.seed);
    g0 *= 2.0 * std::numbers::pi * spec_.amplitude / std::sqrt(enstrophy(g0));
    pattern_.assign(g0.coefficients().begin(), g0.coefficients().end());
  }
}

void Forcing::evaluate(double t, SpectralField& g) const {
  if (!(g.grid() == grid_)) throw std::invalid_argument("Forcing: grid mismatch");
  g.set_zero();
  if (is_zero()) return;
  const double s = spec_.amplitude;
  if (spec_.kind == ForcingKind::LowMode) {
    const double c = std::cos(spec_.frequency * t), sn = std::sin(spec_.frequency * t);
    g.set_mode(2, 0, Complex(0.0, -0.5 * s * c));  // sin 2x
    g.set_mode(0, 2, Complex(0.5 * s * sn, 0.0));  // cos 2y
    g.set_mode(1, -1, Complex(0.5 * s, 0.0));      // cos(x - y)
    return;
  }
  auto coeffs = g.coefficients();
  for (int row = 0; row < grid_.n(); ++row) {
    const int ky = grid_.wavenumber(row);
    for (int kx = 0; kx < grid_.columns(); ++kx) {
      const std::size_t idx = grid_.spectral_index(row, kx);
      if (pattern_[idx] == Complex(0.0, 0.0)) continue;
      const double angle = -(kx * spec_.drift_x + ky * spec_.drift_y) * t;
      coeffs[idx] = pattern_[idx] * std::polar(1.0, angle);
    }
  }
}

SpectralField Forcing::at(double t) const {
  SpectralField g(grid_);
  evaluate(t, g);
  return g;
}

ForcingSource Forcing::source() const {
  if (is_zero()) return {};
  return [self = *this](double t, SpectralField& g) { self.evaluate(t, g); };
}

ForcingNorms Forcing::norms(double horizon, double p, int samples) const {
  if (!(horizon > 0.0)) throw std::invalid_argument("Forcing::norms: horizon must be positive");
  if (samples < 1) throw std::invalid_argument("Forcing::norms: need at least one interval");
  ForcingNorms out;
  if (is_zero()) return out;
  Transform transform(grid_);
  SpectralField g(grid_);
  double previous = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = horizon * i / samples;
    evaluate(t, g);
    out.linf_l2 = std::max(out.linf_l2, std::sqrt(enstrophy(g)));
    const double lp = lp_norm(g, p, transform);
    if (i > 0) out.l1_lp += 0.5 * (horizon / samples) * (previous + lp);
    previous = lp;
  }
  return out;
}

SpectralField make_forcing(const ForcingSpec& spec, const Grid& grid, double t) {
  return Forcing(spec, grid).at(t);
}

}  // namespace vvl

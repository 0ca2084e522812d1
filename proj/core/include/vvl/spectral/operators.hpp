#pragma once

#include <vector>

#include "vvl/spectral/spectral_field.hpp"
#include "vvl/spectral/transform.hpp"

namespace vvl {

// Sign convention: curl u = d_x u_y - d_y u_x, and the velocity of a
// vorticity field is the unique mean-free, divergence-free u with curl u = omega.

/// Velocity of a mean-zero vorticity: u(k) = i (k_y, -k_x) omega(k) / |k|^2.
/// Throws std::invalid_argument if omega has a nonzero mean.
VectorField biot_savart(const SpectralField& omega);

/// g = curl F, i.e. g(k) = i k_x F_y(k) - i k_y F_x(k). Always mean-zero.
SpectralField curl_of_force(const VectorField& force);

/// Divergence-free force whose curl is g (same symbol as biot_savart).
VectorField force_from_vorticity_source(const SpectralField& g);

/// Spectral derivative along x or y.
SpectralField derivative_x(const SpectralField& f);
SpectralField derivative_y(const SpectralField& f);

/// Advection term u . grad(omega) evaluated pseudo-spectrally with the
/// two-thirds rule. Owns its transform and scratch buffers; one instance per
/// simulation.
class NonlinearTerm {
 public:
  explicit NonlinearTerm(const Grid& grid);

  void evaluate(const SpectralField& omega, SpectralField& out);
  SpectralField operator()(const SpectralField& omega);

  /// max |u| over grid points seen by the last evaluate().
  double last_max_speed() const { return last_max_speed_; }

 private:
  Grid grid_;
  Transform transform_;
  std::vector<Complex> scratch_;
  std::vector<double> ux_, uy_, wx_, wy_;
  double last_max_speed_ = 0.0;
};

/// Convenience wrapper building a one-off NonlinearTerm.
SpectralField nonlinear_term(const SpectralField& omega);

/// max over grid points of |u| for the velocity of omega.
double max_speed(const SpectralField& omega, Transform& transform);

}  // namespace vvl

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "vvl/spectral/operators.hpp"
#include "vvl/spectral/spectral_field.hpp"

namespace vvl {

/// (t, omega) of the forced vorticity equation at viscosity nu.
struct SimState {
  double t = 0.0;
  SpectralField omega;
  double nu = 0.0;
};

/// Writes the vorticity source g(t) into its second argument. An empty
/// function means g = 0.
using ForcingSource = std::function<void(double t, SpectralField& g)>;

/// Raised when a coefficient becomes non-finite.
class SolverInstability : public std::runtime_error {
 public:
  explicit SolverInstability(double time);
  double time() const { return time_; }

 private:
  double time_;
};

/// Integrating-factor RK4 for
///   d_t omega + u . grad omega = nu Laplacian(omega) + g.
/// Diffusion enters through the exact factor exp(-nu |k|^2 h); the advection
/// and forcing terms are advanced with the classical four-stage rule. With
/// nu = 0 the scheme is plain RK4.
class IfRk4Stepper {
 public:
  IfRk4Stepper(const Grid& grid, double nu);

  /// One step of size dt > 0.
  void step(SimState& state, double dt, const ForcingSource& forcing);

  /// One step whose size is min(dt_max, cfl * dx / max|u|), with max|u|
  /// taken from the first stage. Returns the step size used.
  double advance(SimState& state, double dt_max, double cfl, const ForcingSource& forcing);

 private:
  void rhs(double t, const SpectralField& omega, const ForcingSource& forcing, SpectralField& out);
  void finish_step(SimState& state, double dt, const ForcingSource& forcing);
  void update_factors(double dt);

  Grid grid_;
  double nu_;
  NonlinearTerm nonlinear_;
  SpectralField k1_, k2_, k3_, k4_, stage_, forcing_buffer_;
  std::vector<double> half_factor_, full_factor_;
  double factor_dt_ = -1.0;
};

/// Functional form of one fixed-size step.
SimState step(const SimState& state, double dt, const ForcingSource& forcing);

}  // namespace vvl

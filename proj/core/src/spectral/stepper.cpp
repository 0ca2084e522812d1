#include "vvl/spectral/stepper.hpp"

#include <cmath>
#include <string>

namespace vvl {

SolverInstability::SolverInstability(double time)
    : std::runtime_error("solver instability: non-finite vorticity at t = " + std::to_string(time)),
      time_(time) {}

IfRk4Stepper::IfRk4Stepper(const Grid& grid, double nu)
    : grid_(grid),
      nu_(nu),
      nonlinear_(grid),
      k1_(grid),
      k2_(grid),
      k3_(grid),
      k4_(grid),
      stage_(grid),
      forcing_buffer_(grid),
      half_factor_(grid.spectral_size(), 1.0),
      full_factor_(grid.spectral_size(), 1.0) {
  if (nu < 0.0) throw std::invalid_argument("viscosity must be non-negative");
}

void IfRk4Stepper::update_factors(double dt) {
  if (dt == factor_dt_) return;
  for (int row = 0; row < grid_.n(); ++row) {
    const double ky = grid_.wavenumber(row);
    for (int col = 0; col < grid_.columns(); ++col) {
      const double k2 = static_cast<double>(col) * col + ky * ky;
      const std::size_t idx = grid_.spectral_index(row, col);
      half_factor_[idx] = std::exp(-0.5 * nu_ * k2 * dt);
      full_factor_[idx] = std::exp(-nu_ * k2 * dt);
    }
  }
  factor_dt_ = dt;
}

void IfRk4Stepper::rhs(double t, const SpectralField& omega, const ForcingSource& forcing,
                       SpectralField& out) {
  nonlinear_.evaluate(omega, out);
  out *= -1.0;
  if (forcing) {
    forcing(t, forcing_buffer_);
    out += forcing_buffer_;
  }
}

void IfRk4Stepper::step(SimState& state, double dt, const ForcingSource& forcing) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  rhs(state.t, state.omega, forcing, k1_);
  finish_step(state, dt, forcing);
}

double IfRk4Stepper::advance(SimState& state, double dt_max, double cfl, const ForcingSource& forcing) {
  if (!(dt_max > 0.0)) throw std::invalid_argument("advance: dt_max must be positive");
  rhs(state.t, state.omega, forcing, k1_);
  const double speed = nonlinear_.last_max_speed();
  double dt = dt_max;
  if (speed > 0.0) dt = std::min(dt, cfl * grid_.spacing() / speed);
  finish_step(state, dt, forcing);
  return dt;
}

// Lawson form: with v = exp(nu |k|^2 t) omega the diffusion drops out and the
// classical RK4 tableau acts on v.
void IfRk4Stepper::finish_step(SimState& state, double dt, const ForcingSource& forcing) {
  update_factors(dt);
  auto coeff = [](SpectralField& f) { return f.coefficients(); };
  const auto w = state.omega.coefficients();
  const std::size_t size = w.size();
  const double h = dt;

  auto s = coeff(stage_);
  auto a1 = coeff(k1_);
  for (std::size_t i = 0; i < size; ++i) s[i] = half_factor_[i] * (w[i] + 0.5 * h * a1[i]);
  rhs(state.t + 0.5 * h, stage_, forcing, k2_);

  auto a2 = coeff(k2_);
  for (std::size_t i = 0; i < size; ++i) s[i] = half_factor_[i] * w[i] + 0.5 * h * a2[i];
  rhs(state.t + 0.5 * h, stage_, forcing, k3_);

  auto a3 = coeff(k3_);
  for (std::size_t i = 0; i < size; ++i) s[i] = full_factor_[i] * w[i] + h * half_factor_[i] * a3[i];
  rhs(state.t + h, stage_, forcing, k4_);

  auto a4 = coeff(k4_);
  auto out = state.omega.coefficients();
  for (std::size_t i = 0; i < size; ++i) {
    out[i] = full_factor_[i] * w[i] +
             (h / 6.0) * (full_factor_[i] * a1[i] + 2.0 * half_factor_[i] * (a2[i] + a3[i]) + a4[i]);
  }
  state.omega.enforce_hermitian();
  state.omega.remove_mean();
  state.t += h;
  if (!state.omega.is_finite()) throw SolverInstability(state.t);
}

SimState step(const SimState& state, double dt, const ForcingSource& forcing) {
  SimState next = state;
  IfRk4Stepper stepper(state.omega.grid(), state.nu);
  stepper.step(next, dt, forcing);
  return next;
}

}  // namespace vvl

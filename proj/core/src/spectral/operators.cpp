#include "vvl/spectral/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vvl {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_mean_zero(const SpectralField& f, const char* what) {
  if (f.mean() != Complex{0.0, 0.0}) {
    throw std::invalid_argument(std::string(what) + ": input must have zero mean");
  }
}

// out_x(k) = i k_y f(k)/|k|^2, out_y(k) = -i k_x f(k)/|k|^2
VectorField inverse_curl(const SpectralField& f) {
  const Grid& g = f.grid();
  VectorField out{SpectralField(g, true), SpectralField(g, true)};
  for (int row = 0; row < g.n(); ++row) {
    const int ky = g.wavenumber(row);
    const int dky = g.derivative_wavenumber(row);
    for (int col = 0; col < g.columns(); ++col) {
      if (row == 0 && col == 0) continue;
      const int dkx = g.derivative_wavenumber(col);
      const double k2 = static_cast<double>(col) * col + static_cast<double>(ky) * ky;
      const Complex c = f.at(row, col) / k2;
      out.x.at(row, col) = kI * static_cast<double>(dky) * c;
      out.y.at(row, col) = -kI * static_cast<double>(dkx) * c;
    }
  }
  return out;
}

}  // namespace

VectorField biot_savart(const SpectralField& omega) {
  require_mean_zero(omega, "biot_savart");
  return inverse_curl(omega);
}

VectorField force_from_vorticity_source(const SpectralField& g) {
  require_mean_zero(g, "force_from_vorticity_source");
  return inverse_curl(g);
}

SpectralField curl_of_force(const VectorField& force) {
  const Grid& g = force.x.grid();
  if (!(force.y.grid() == g)) throw std::invalid_argument("curl_of_force: grid mismatch");
  SpectralField out(g, true);
  for (int row = 0; row < g.n(); ++row) {
    const double ky = g.derivative_wavenumber(row);
    for (int col = 0; col < g.columns(); ++col) {
      if (row == 0 && col == 0) continue;
      const double kx = g.derivative_wavenumber(col);
      out.at(row, col) = kI * kx * force.y.at(row, col) - kI * ky * force.x.at(row, col);
    }
  }
  return out;
}

SpectralField derivative_x(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out(g, true);
  for (int row = 0; row < g.n(); ++row) {
    for (int col = 0; col < g.columns(); ++col) {
      out.at(row, col) = kI * static_cast<double>(g.derivative_wavenumber(col)) * f.at(row, col);
    }
  }
  return out;
}

SpectralField derivative_y(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out(g, true);
  for (int row = 0; row < g.n(); ++row) {
    const double ky = g.derivative_wavenumber(row);
    for (int col = 0; col < g.columns(); ++col) {
      out.at(row, col) = kI * ky * f.at(row, col);
    }
  }
  return out;
}

NonlinearTerm::NonlinearTerm(const Grid& grid)
    : grid_(grid),
      transform_(grid),
      scratch_(grid.spectral_size()),
      ux_(grid.real_size()),
      uy_(grid.real_size()),
      wx_(grid.real_size()),
      wy_(grid.real_size()) {}

void NonlinearTerm::evaluate(const SpectralField& omega, SpectralField& out) {
  if (!(omega.grid() == grid_) || !(out.grid() == grid_)) {
    throw std::invalid_argument("nonlinear_term: grid mismatch");
  }
  const int n = grid_.n();
  const int cols = grid_.columns();
  auto load = [&](auto&& symbol, std::vector<double>& dst) {
    for (int row = 0; row < n; ++row) {
      const int ky = grid_.wavenumber(row);
      const int dky = grid_.derivative_wavenumber(row);
      for (int col = 0; col < cols; ++col) {
        const std::size_t idx = grid_.spectral_index(row, col);
        if (idx == 0) {
          scratch_[idx] = Complex{0.0, 0.0};
          continue;
        }
        scratch_[idx] = symbol(col, ky, grid_.derivative_wavenumber(col), dky) * omega.at(row, col);
      }
    }
    transform_.to_physical(scratch_, dst);
  };
  auto inv_k2 = [](int kx, int ky) { return 1.0 / (static_cast<double>(kx) * kx + static_cast<double>(ky) * ky); };
  load([&](int kx, int ky, int, int dky) { return kI * (dky * inv_k2(kx, ky)); }, ux_);
  load([&](int kx, int ky, int dkx, int) { return -kI * (dkx * inv_k2(kx, ky)); }, uy_);
  load([](int, int, int dkx, int) { return kI * static_cast<double>(dkx); }, wx_);
  load([](int, int, int, int dky) { return kI * static_cast<double>(dky); }, wy_);

  double max_u2 = 0.0;
  for (std::size_t i = 0; i < ux_.size(); ++i) {
    max_u2 = std::max(max_u2, ux_[i] * ux_[i] + uy_[i] * uy_[i]);
    ux_[i] = ux_[i] * wx_[i] + uy_[i] * wy_[i];
  }
  last_max_speed_ = std::sqrt(max_u2);

  transform_.to_spectral(ux_, out.coefficients());
  out.enforce_hermitian();
  out.remove_mean();
  out.dealias();
}

SpectralField NonlinearTerm::operator()(const SpectralField& omega) {
  SpectralField out(grid_, true);
  evaluate(omega, out);
  return out;
}

SpectralField nonlinear_term(const SpectralField& omega) {
  NonlinearTerm term(omega.grid());
  return term(omega);
}

double max_speed(const SpectralField& omega, Transform& transform) {
  const VectorField u = biot_savart(omega);
  const auto ux = transform.to_physical(u.x);
  const auto uy = transform.to_physical(u.y);
  double m = 0.0;
  for (std::size_t i = 0; i < ux.size(); ++i) m = std::max(m, ux[i] * ux[i] + uy[i] * uy[i]);
  return std::sqrt(m);
}

}  // namespace vvl

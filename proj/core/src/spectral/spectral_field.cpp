#include "vvl/spectral/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vvl {

SpectralField::SpectralField(const Grid& grid, bool mean_zero)
    : grid_(grid), mean_zero_(mean_zero), coeffs_(grid.spectral_size(), Complex{0.0, 0.0}) {}

Complex SpectralField::mode(int kx, int ky) const {
  const int n = grid_.n();
  if (kx < 0) return std::conj(mode(-kx, -ky));
  if (kx > n / 2 || ky > n / 2 || ky < -n / 2) {
    throw std::out_of_range("wavenumber outside grid");
  }
  return at(grid_.row_of(ky), kx);
}

void SpectralField::set_mode(int kx, int ky, Complex value) {
  const int n = grid_.n();
  if (kx < 0) {
    set_mode(-kx, -ky, std::conj(value));
    return;
  }
  if (kx == 0 && ky == 0) {
    if (mean_zero_) {
      throw std::invalid_argument("cannot set the k = 0 mode of a mean-zero field");
    }
    coeffs_[0] = Complex{value.real(), 0.0};
    return;
  }
  if (kx > n / 2 || std::abs(ky) > n / 2) {
    throw std::out_of_range("wavenumber outside grid");
  }
  const int row = grid_.row_of(ky);
  if (kx == 0 || kx == n / 2) {
    const int mirror = grid_.row_of(-ky);
    if (mirror == row) {
      at(row, kx) = Complex{value.real(), 0.0};
    } else {
      at(row, kx) = value;
      at(mirror, kx) = std::conj(value);
    }
  } else {
    at(row, kx) = value;
  }
}

void SpectralField::add_mode(int kx, int ky, Complex value) {
  set_mode(kx, ky, mode(kx, ky) + value);
}

void SpectralField::enforce_hermitian() {
  const int n = grid_.n();
  for (int col : {0, n / 2}) {
    for (int row = 0; row <= n / 2; ++row) {
      const int mirror = (n - row) % n;
      if (mirror == row) {
        at(row, col).imag(0.0);
        continue;
      }
      const Complex avg = 0.5 * (at(row, col) + std::conj(at(mirror, col)));
      at(row, col) = avg;
      at(mirror, col) = std::conj(avg);
    }
  }
  if (mean_zero_) coeffs_[0] = Complex{0.0, 0.0};
}

double SpectralField::hermitian_defect() const {
  const int n = grid_.n();
  double defect = 0.0;
  for (int col : {0, n / 2}) {
    for (int row = 0; row < n; ++row) {
      const int mirror = (n - row) % n;
      defect = std::max(defect, std::abs(at(mirror, col) - std::conj(at(row, col))));
    }
  }
  return defect;
}

void SpectralField::remove_mean() {
  coeffs_[0] = Complex{0.0, 0.0};
  mean_zero_ = true;
}

void SpectralField::dealias() {
  const int n = grid_.n();
  for (int row = 0; row < n; ++row) {
    const int ky = grid_.wavenumber(row);
    for (int col = 0; col < grid_.columns(); ++col) {
      if (!grid_.retained(col, ky)) at(row, col) = Complex{0.0, 0.0};
    }
  }
}

bool SpectralField::is_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

void SpectralField::set_zero() { std::fill(coeffs_.begin(), coeffs_.end(), Complex{0.0, 0.0}); }

void SpectralField::check_compatible(const SpectralField& other) const {
  if (!(grid_ == other.grid_)) {
    throw std::invalid_argument("spectral fields live on different grids");
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  axpy(1.0, other);
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  axpy(-1.0, other);
  return *this;
}

SpectralField& SpectralField::operator*=(double scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

void SpectralField::axpy(double scale, const SpectralField& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += scale * other.coeffs_[i];
  mean_zero_ = mean_zero_ && other.mean_zero_;
}

SpectralField operator+(SpectralField lhs, const SpectralField& rhs) { return lhs += rhs; }
SpectralField operator-(SpectralField lhs, const SpectralField& rhs) { return lhs -= rhs; }
SpectralField operator*(double scale, SpectralField field) { return field *= scale; }

}  // namespace vvl

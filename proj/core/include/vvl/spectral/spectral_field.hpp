#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vvl/spectral/grid.hpp"

namespace vvl {

using Complex = std::complex<double>;

/// Fourier coefficients of a real scalar field on the torus.
///
/// Coefficients are unit-normalized:
///   c(k) = (2 pi)^-2 * integral of f(x) exp(-i k.x) dx,
/// so f(x) = sum_k c(k) exp(i k.x). Only the half spectrum k_x >= 0 is stored;
/// the mirror half follows from Hermitian symmetry. When the mean-zero flag
/// is set the k = 0 coefficient is held at exactly zero.
class SpectralField {
 public:
  explicit SpectralField(const Grid& grid, bool mean_zero = true);

  const Grid& grid() const { return grid_; }
  bool mean_zero() const { return mean_zero_; }

  std::span<Complex> coefficients() { return coeffs_; }
  std::span<const Complex> coefficients() const { return coeffs_; }

  Complex& at(int row, int col) { return coeffs_[grid_.spectral_index(row, col)]; }
  const Complex& at(int row, int col) const { return coeffs_[grid_.spectral_index(row, col)]; }

  /// Coefficient at a signed wavenumber; k_x < 0 is read through conjugation.
  Complex mode(int kx, int ky) const;

  /// Sets c(k) = value and c(-k) = conj(value). For self-conjugate modes the
  /// imaginary part is dropped. Setting k = 0 on a mean-zero field throws.
  void set_mode(int kx, int ky, Complex value);
  void add_mode(int kx, int ky, Complex value);

  Complex mean() const { return coeffs_[0]; }

  /// Restores exact Hermitian symmetry in the self-conjugate columns by
  /// averaging each pair (k, -k).
  void enforce_hermitian();

  /// Largest |c(-k) - conj(c(k))| over the self-conjugate columns.
  double hermitian_defect() const;

  /// Zero the k = 0 coefficient and set the mean-zero flag.
  void remove_mean();

  /// Zero every mode outside the two-thirds band.
  void dealias();

  bool is_finite() const;
  void set_zero();

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double scale);
  /// this += scale * other
  void axpy(double scale, const SpectralField& other);

 private:
  void check_compatible(const SpectralField& other) const;

  Grid grid_;
  bool mean_zero_;
  std::vector<Complex> coeffs_;
};

SpectralField operator+(SpectralField lhs, const SpectralField& rhs);
SpectralField operator-(SpectralField lhs, const SpectralField& rhs);
SpectralField operator*(double scale, SpectralField field);

/// Pair of scalar components (x, y) of a vector field.
struct VectorField {
  SpectralField x;
  SpectralField y;
};

}  // namespace vvl

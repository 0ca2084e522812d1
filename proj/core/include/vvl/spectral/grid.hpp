#pragma once

#include <cstddef>
#include <numbers>

namespace vvl {

/// Uniform n x n grid on the 2*pi-periodic torus.
///
/// Physical values are stored row-major with x fastest: value (x_i, y_j)
/// lives at j*n + i. Spectral coefficients use the real-to-complex half
/// layout: row j carries k_y = wavenumber(j), column i carries k_x = i for
/// i = 0..n/2. Wavenumbers run over {-n/2+1, ..., n/2}.
class Grid {
 public:
  /// Throws std::invalid_argument unless n >= 8 and n is even.
  explicit Grid(int n);

  int n() const { return n_; }
  int columns() const { return n_ / 2 + 1; }
  std::size_t real_size() const { return static_cast<std::size_t>(n_) * n_; }
  std::size_t spectral_size() const { return static_cast<std::size_t>(n_) * columns(); }

  double spacing() const { return 2.0 * std::numbers::pi / n_; }
  double coordinate(int i) const { return i * spacing(); }
  double cell_area() const { return spacing() * spacing(); }

  /// Signed wavenumber of row j (k_y); also valid for full-complex column indices.
  int wavenumber(int j) const { return j <= n_ / 2 ? j : j - n_; }

  /// Wavenumber used by first-derivative symbols: the Nyquist mode is dropped
  /// so odd derivatives of real fields stay real.
  int derivative_wavenumber(int j) const {
    return j == n_ / 2 ? 0 : wavenumber(j);
  }

  /// Row index holding signed wavenumber k_y.
  int row_of(int ky) const { return ky >= 0 ? ky : ky + n_; }

  std::size_t spectral_index(int row, int col) const {
    return static_cast<std::size_t>(row) * columns() + col;
  }
  std::size_t real_index(int j, int i) const {
    return static_cast<std::size_t>(j) * n_ + i;
  }

  /// Two-thirds rule: a mode survives when 3|k_x| < n and 3|k_y| < n.
  bool retained(int kx, int ky) const {
    return 3 * (kx < 0 ? -kx : kx) < n_ && 3 * (ky < 0 ? -ky : ky) < n_;
  }

  /// Largest retained |k| per direction.
  int retained_max() const { return (n_ - 1) / 3; }

  /// Multiplicity of a half-layout column when summing over the full
  /// spectrum: columns 0 and n/2 are self-conjugate, the others stand for
  /// themselves and their mirror image.
  double column_weight(int col) const {
    return (col == 0 || col == n_ / 2) ? 1.0 : 2.0;
  }

  bool operator==(const Grid&) const = default;

 private:
  int n_;
};

}  // namespace vvl

#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vvl/spectral/spectral_field.hpp"

namespace vvl {

/// Real <-> spectral transforms on one grid.
///
/// Each instance owns its FFTW plans and work buffers, so distinct instances
/// may be used concurrently from different threads. A single instance is not
/// thread-safe. Plan creation and destruction are serialized internally.
class Transform {
 public:
  explicit Transform(const Grid& grid);
  ~Transform();
  Transform(Transform&&) noexcept;
  Transform& operator=(Transform&&) noexcept;
  Transform(const Transform&) = delete;
  Transform& operator=(const Transform&) = delete;

  const Grid& grid() const;

  /// Physical values from unit-normalized coefficients. `out` has n*n entries.
  void to_physical(std::span<const Complex> coeffs, std::span<double> out);
  void to_physical(const SpectralField& field, std::span<double> out);
  std::vector<double> to_physical(const SpectralField& field);

  /// Unit-normalized coefficients of physical values. The result is made
  /// exactly Hermitian; with `mean_zero` the k = 0 mode is dropped.
  void to_spectral(std::span<const double> values, std::span<Complex> out);
  SpectralField to_spectral(std::span<const double> values, bool mean_zero);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vvl

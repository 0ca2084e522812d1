#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "vvl/spectral/spectral_field.hpp"
#include "vvl/spectral/transform.hpp"

namespace vvl::testing {

using PointFunction = std::function<double(double x, double y)>;

inline std::vector<double> sample(const Grid& grid, const PointFunction& f) {
  std::vector<double> v(grid.real_size());
  for (int j = 0; j < grid.n(); ++j) {
    for (int i = 0; i < grid.n(); ++i) v[grid.real_index(j, i)] = f(grid.coordinate(i), grid.coordinate(j));
  }
  return v;
}

inline SpectralField field_from(const Grid& grid, const PointFunction& f, bool mean_zero = true) {
  Transform t(grid);
  return t.to_spectral(sample(grid, f), mean_zero);
}

inline std::vector<double> physical(const SpectralField& field) {
  Transform t(field.grid());
  return t.to_physical(field);
}

/// max over grid points of |field - f|.
inline double max_error(const SpectralField& field, const PointFunction& f) {
  const auto v = physical(field);
  const auto w = sample(field.grid(), f);
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(v[i] - w[i]));
  return worst;
}

inline double max_coefficient_difference(const SpectralField& a, const SpectralField& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    worst = std::max(worst, std::abs(a.coefficients()[i] - b.coefficients()[i]));
  }
  return worst;
}

}  // namespace vvl::testing

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vvl/spectral/spectral_field.hpp"

namespace vvl {

/// Physical-space field snapshot. On disk (little-endian):
///   "VVF1" | u32 n | f64 t | f64 nu | n*n f64 values, row-major, x fastest.
struct Snapshot {
  std::uint32_t n = 0;
  double t = 0.0;
  double nu = 0.0;
  std::vector<double> values;
};

Snapshot make_snapshot(const SpectralField& omega, double t, double nu);

void write_snapshot(std::ostream& out, const Snapshot& snap);
void write_snapshot(const std::string& path, const Snapshot& snap);

/// Throws std::runtime_error on a bad magic, truncated payload or n mismatch.
Snapshot read_snapshot(std::istream& in);
Snapshot read_snapshot(const std::string& path);

}  // namespace vvl

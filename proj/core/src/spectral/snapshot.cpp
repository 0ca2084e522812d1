#include "vvl/spectral/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "vvl/spectral/transform.hpp"

namespace vvl {

namespace {

constexpr std::array<char, 4> kMagic{'V', 'V', 'F', '1'};

template <typename T>
void put(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get(std::istream& in) {
  std::array<char, sizeof(T)> bytes;
  if (!in.read(bytes.data(), bytes.size())) throw std::runtime_error("snapshot: truncated file");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

Snapshot make_snapshot(const SpectralField& omega, double t, double nu) {
  Transform transform(omega.grid());
  Snapshot snap;
  snap.n = static_cast<std::uint32_t>(omega.grid().n());
  snap.t = t;
  snap.nu = nu;
  snap.values = transform.to_physical(omega);
  return snap;
}

void write_snapshot(std::ostream& out, const Snapshot& snap) {
  if (snap.values.size() != static_cast<std::size_t>(snap.n) * snap.n) {
    throw std::invalid_argument("snapshot: payload size does not match n");
  }
  out.write(kMagic.data(), kMagic.size());
  put(out, snap.n);
  put(out, snap.t);
  put(out, snap.nu);
  for (double v : snap.values) put(out, v);
  if (!out) throw std::runtime_error("snapshot: write failed");
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_snapshot(out, snap);
}

Snapshot read_snapshot(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("snapshot: bad magic");
  }
  Snapshot snap;
  snap.n = get<std::uint32_t>(in);
  snap.t = get<double>(in);
  snap.nu = get<double>(in);
  snap.values.resize(static_cast<std::size_t>(snap.n) * snap.n);
  for (double& v : snap.values) v = get<double>(in);
  return snap;
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_snapshot(in);
}

}  // namespace vvl

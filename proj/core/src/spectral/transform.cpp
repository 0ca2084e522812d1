#include "vvl/spectral/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace vvl {

namespace {

// FFTW's planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

}  // namespace

struct Transform::Impl {
  explicit Impl(const Grid& g) : grid(g) {
    real.reset(fftw_alloc_real(grid.real_size()));
    spec.reset(fftw_alloc_complex(grid.spectral_size()));
    if (!real || !spec) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    // FFTW_ESTIMATE keeps plan selection, and therefore every output bit,
    // independent of machine load.
    forward = fftw_plan_dft_r2c_2d(grid.n(), grid.n(), real.get(), spec.get(),
                                   FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
    backward = fftw_plan_dft_c2r_2d(grid.n(), grid.n(), spec.get(), real.get(),
                                    FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
    if (forward == nullptr || backward == nullptr) {
      throw std::runtime_error("FFTW plan creation failed");
    }
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }

  Grid grid;
  std::unique_ptr<double, FftwFree> real;
  std::unique_ptr<fftw_complex, FftwFree> spec;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

Transform::Transform(const Grid& grid) : impl_(std::make_unique<Impl>(grid)) {}
Transform::~Transform() = default;
Transform::Transform(Transform&&) noexcept = default;
Transform& Transform::operator=(Transform&&) noexcept = default;

const Grid& Transform::grid() const { return impl_->grid; }

void Transform::to_physical(std::span<const Complex> coeffs, std::span<double> out) {
  const Grid& g = impl_->grid;
  if (coeffs.size() != g.spectral_size() || out.size() != g.real_size()) {
    throw std::invalid_argument("to_physical: buffer size does not match grid");
  }
  static_assert(sizeof(Complex) == sizeof(fftw_complex));
  std::memcpy(impl_->spec.get(), coeffs.data(), coeffs.size_bytes());
  fftw_execute(impl_->backward);
  std::copy_n(impl_->real.get(), g.real_size(), out.begin());
}

void Transform::to_physical(const SpectralField& field, std::span<double> out) {
  if (!(field.grid() == impl_->grid)) throw std::invalid_argument("to_physical: grid mismatch");
  to_physical(field.coefficients(), out);
}

std::vector<double> Transform::to_physical(const SpectralField& field) {
  std::vector<double> out(impl_->grid.real_size());
  to_physical(field, out);
  return out;
}

void Transform::to_spectral(std::span<const double> values, std::span<Complex> out) {
  const Grid& g = impl_->grid;
  if (values.size() != g.real_size() || out.size() != g.spectral_size()) {
    throw std::invalid_argument("to_spectral: buffer size does not match grid");
  }
  std::copy(values.begin(), values.end(), impl_->real.get());
  fftw_execute(impl_->forward);
  const double scale = 1.0 / static_cast<double>(g.real_size());
  const auto* src = reinterpret_cast<const Complex*>(impl_->spec.get());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = src[i] * scale;
}

SpectralField Transform::to_spectral(std::span<const double> values, bool mean_zero) {
  SpectralField field(impl_->grid, false);
  to_spectral(values, field.coefficients());
  field.enforce_hermitian();
  if (mean_zero) field.remove_mean();
  return field;
}

}  // namespace vvl

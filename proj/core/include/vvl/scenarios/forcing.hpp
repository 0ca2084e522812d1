#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vvl/spectral/spectral_field.hpp"
#include "vvl/spectral/stepper.hpp"

namespace vvl {

enum class ForcingKind { None, LowMode, Rough };

std::string to_string(ForcingKind kind);
/// Accepts none / low_mode / rough.
ForcingKind parse_forcing_kind(const std::string& text);

struct ForcingSpec {
  ForcingKind kind = ForcingKind::None;
  /// |g(t)|_{L2} = 2 pi * amplitude for every t.
  double amplitude = 0.0;
  /// Angular frequency of the low-mode rotation.
  double frequency = 1.0;
  /// Spectral slope of the rough forcing.
  double gamma = 1.5;
  /// Translation velocity of the rough pattern.
  double drift_x = 1.0;
  double drift_y = 0.5;
  std::uint64_t seed = 7;

  void validate() const;
};

/// Time norms of g on [0, T] from `samples` + 1 equispaced evaluations.
struct ForcingNorms {
  double linf_l2 = 0.0;  ///< max_t |g(t)|_{L2}
  double l1_lp = 0.0;    ///< trapezoid int_0^T |g(t)|_{Lp} dt
};

/// Vorticity source g = curl F.
///  - none: g = 0.
///  - low_mode: g = s [cos(W t) sin 2x + sin(W t) cos 2y + cos(x - y)].
///  - rough: a fixed |k|^(-gamma) pattern with |g|_{L2} = 2 pi s, translated
///    with constant drift, i.e. g(k, t) = g0(k) exp(-i k.c t).
class Forcing {
 public:
  Forcing(const ForcingSpec& spec, const Grid& grid);

  const ForcingSpec& spec() const { return spec_; }
  bool is_zero() const { return spec_.kind == ForcingKind::None || spec_.amplitude == 0.0; }

  void evaluate(double t, SpectralField& g) const;
  SpectralField at(double t) const;
  /// Empty for a zero forcing, so runs skip the source entirely.
  ForcingSource source() const;

  ForcingNorms norms(double horizon, double p, int samples = 200) const;

 private:
  ForcingSpec spec_;
  Grid grid_;
  std::vector<Complex> pattern_;
};

/// g(t) for `spec` on `grid`.
SpectralField make_forcing(const ForcingSpec& spec, const Grid& grid, double t);

}  // namespace vvl

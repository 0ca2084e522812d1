#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vvl/spectral/spectral_field.hpp"
#include "vvl/spectral/transform.hpp"

namespace vvl {

/// One time sample of the quantities entering the energy balance
///   |u(t)|^2 = |u0|^2 - 2 nu int_0^t |omega|^2 ds + 2 int_0^t int F.u dx ds.
struct DiagnosticsRecord {
  double t = 0.0;
  double energy = 0.0;           ///< |u|^2_{L2}
  double enstrophy = 0.0;        ///< |omega|^2_{L2}
  double lp_norm = 0.0;          ///< |omega|_{Lp}
  double cum_dissipation = 0.0;  ///< 2 nu int_0^t |omega|^2 ds
  double cum_work = 0.0;         ///< 2 int_0^t int F.u dx ds
  double balance_residual = 0.0; ///< energy - E(0) + cum_dissipation - cum_work
};

/// (2 pi)^2 sum_{k != 0} |omega(k)|^2 / |k|^2. Requires zero mean.
double kinetic_energy(const SpectralField& omega);

/// (2 pi)^2 sum_k |omega(k)|^2.
double enstrophy(const SpectralField& omega);

/// L2 inner product (2 pi)^2 sum_k Re(a(k) conj(b(k))).
double inner_product(const SpectralField& a, const SpectralField& b);

/// Rectangle-rule (int |f|^p dx)^(1/p) of physical grid values. p <= 1 throws.
double lp_norm(std::span<const double> values, const Grid& grid, double p);
double lp_norm(const SpectralField& f, double p, Transform& transform);
double lp_norm(const SpectralField& f, double p);

/// Power input 2 int F.u dx, with F the divergence-free force of vorticity
/// source g and u the velocity of omega. Evaluated by Parseval.
double work_rate(const SpectralField& omega, const SpectralField& g);

/// Running trapezoid integral of f over t; result[0] = 0.
std::vector<double> cumulative_trapezoid(std::span<const double> t, std::span<const double> f);

/// energy(t) - initial_energy + cum_dissipation(t) - cum_work(t) for each sample.
/// Throws std::invalid_argument on an empty series.
std::vector<double> balance_residual(std::span<const DiagnosticsRecord> series, double initial_energy);

struct BoundCheck {
  bool holds = true;
  std::optional<std::size_t> first_violation;
  /// Largest value of (lhs - rhs) seen; negative when the bound holds with slack.
  double worst_margin = 0.0;
};

/// Checks |omega(t)|_p <= |omega0|_p + int_0^t |g|_p ds + 1e-6 |omega0|_p at every
/// sample. `g_lp_timeintegral[i]` is the forcing integral up to series[i].t.
BoundCheck lp_bound_check(std::span<const DiagnosticsRecord> series, double omega0_lp,
                          std::span<const double> g_lp_timeintegral);

/// Builds DiagnosticsRecords sample by sample, accumulating the dissipation,
/// work and forcing-norm integrals with the trapezoid rule.
class DiagnosticsAccumulator {
 public:
  DiagnosticsAccumulator(const Grid& grid, double nu, double p);

  /// `g` may be null for an unforced run.
  const DiagnosticsRecord& record(double t, const SpectralField& omega, const SpectralField* g);

  const std::vector<DiagnosticsRecord>& records() const { return records_; }
  const std::vector<double>& forcing_lp() const { return forcing_lp_; }
  const std::vector<double>& forcing_lp_integral() const { return forcing_lp_integral_; }
  double initial_energy() const { return records_.empty() ? 0.0 : records_.front().energy; }

 private:
  Grid grid_;
  double nu_;
  double p_;
  Transform transform_;
  std::vector<double> buffer_;
  std::vector<DiagnosticsRecord> records_;
  std::vector<double> forcing_lp_;
  std::vector<double> forcing_lp_integral_;
  double last_dissipation_rate_ = 0.0;
  double last_work_rate_ = 0.0;
};

}  // namespace vvl

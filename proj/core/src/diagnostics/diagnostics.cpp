#include "vvl/diagnostics/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vvl {

namespace {

constexpr double kTorusArea = 4.0 * std::numbers::pi * std::numbers::pi;

template <typename Weight>
double weighted_sum(const SpectralField& f, Weight&& weight) {
  const Grid& g = f.grid();
  double sum = 0.0;
  for (int row = 0; row < g.n(); ++row) {
    const int ky = g.wavenumber(row);
    for (int col = 0; col < g.columns(); ++col) {
      sum += g.column_weight(col) * weight(col, ky, f.at(row, col));
    }
  }
  return sum;
}

}  // namespace

double kinetic_energy(const SpectralField& omega) {
  if (omega.mean() != Complex{0.0, 0.0}) {
    throw std::invalid_argument("kinetic_energy: vorticity must have zero mean");
  }
  return kTorusArea * weighted_sum(omega, [](int kx, int ky, const Complex& c) {
           if (kx == 0 && ky == 0) return 0.0;
           return std::norm(c) / (static_cast<double>(kx) * kx + static_cast<double>(ky) * ky);
         });
}

double enstrophy(const SpectralField& omega) {
  return kTorusArea * weighted_sum(omega, [](int, int, const Complex& c) { return std::norm(c); });
}

double inner_product(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("inner_product: grid mismatch");
  const Grid& g = a.grid();
  double sum = 0.0;
  for (int row = 0; row < g.n(); ++row) {
    for (int col = 0; col < g.columns(); ++col) {
      sum += g.column_weight(col) * (a.at(row, col) * std::conj(b.at(row, col))).real();
    }
  }
  return kTorusArea * sum;
}

double lp_norm(std::span<const double> values, const Grid& grid, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("lp_norm: p must exceed 1");
  if (values.size() != grid.real_size()) throw std::invalid_argument("lp_norm: size mismatch");
  double sum = 0.0;
  for (double v : values) sum += std::pow(std::abs(v), p);
  return std::pow(sum * grid.cell_area(), 1.0 / p);
}

double lp_norm(const SpectralField& f, double p, Transform& transform) {
  if (!(p > 1.0)) throw std::invalid_argument("lp_norm: p must exceed 1");
  return lp_norm(transform.to_physical(f), f.grid(), p);
}

double lp_norm(const SpectralField& f, double p) {
  Transform transform(f.grid());
  return lp_norm(f, p, transform);
}

double work_rate(const SpectralField& omega, const SpectralField& g) {
  if (!(omega.grid() == g.grid())) throw std::invalid_argument("work_rate: grid mismatch");
  const Grid& grid = omega.grid();
  double sum = 0.0;
  for (int row = 0; row < grid.n(); ++row) {
    const int ky = grid.wavenumber(row);
    for (int col = 0; col < grid.columns(); ++col) {
      if (row == 0 && col == 0) continue;
      const double k2 = static_cast<double>(col) * col + static_cast<double>(ky) * ky;
      sum += grid.column_weight(col) * (g.at(row, col) * std::conj(omega.at(row, col))).real() / k2;
    }
  }
  return 2.0 * kTorusArea * sum;
}

std::vector<double> cumulative_trapezoid(std::span<const double> t, std::span<const double> f) {
  if (t.size() != f.size()) throw std::invalid_argument("cumulative_trapezoid: size mismatch");
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t i = 1; i < t.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (f[i] + f[i - 1]);
  }
  return out;
}

std::vector<double> balance_residual(std::span<const DiagnosticsRecord> series, double initial_energy) {
  if (series.empty()) throw std::invalid_argument("balance_residual: empty series");
  std::vector<double> out;
  out.reserve(series.size());
  for (const auto& r : series) {
    out.push_back(r.energy - initial_energy + r.cum_dissipation - r.cum_work);
  }
  return out;
}

BoundCheck lp_bound_check(std::span<const DiagnosticsRecord> series, double omega0_lp,
                          std::span<const double> g_lp_timeintegral) {
  if (g_lp_timeintegral.size() != series.size()) {
    throw std::invalid_argument("lp_bound_check: forcing integral must align with series");
  }
  const double tol = 1e-6 * omega0_lp;
  BoundCheck result;
  result.worst_margin = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double margin = series[i].lp_norm - (omega0_lp + g_lp_timeintegral[i] + tol);
    result.worst_margin = std::max(result.worst_margin, margin);
    if (margin > 0.0 && result.holds) {
      result.holds = false;
      result.first_violation = i;
    }
  }
  return result;
}

DiagnosticsAccumulator::DiagnosticsAccumulator(const Grid& grid, double nu, double p)
    : grid_(grid), nu_(nu), p_(p), transform_(grid), buffer_(grid.real_size()) {
  if (!(p > 1.0)) throw std::invalid_argument("DiagnosticsAccumulator: p must exceed 1");
  if (nu < 0.0) throw std::invalid_argument("DiagnosticsAccumulator: nu must be non-negative");
}

const DiagnosticsRecord& DiagnosticsAccumulator::record(double t, const SpectralField& omega,
                                                        const SpectralField* g) {
  DiagnosticsRecord rec;
  rec.t = t;
  rec.energy = kinetic_energy(omega);
  rec.enstrophy = enstrophy(omega);
  transform_.to_physical(omega, buffer_);
  rec.lp_norm = lp_norm(buffer_, grid_, p_);

  const double dissipation_rate = 2.0 * nu_ * rec.enstrophy;
  double work = 0.0;
  double g_lp = 0.0;
  if (g != nullptr) {
    work = work_rate(omega, *g);
    transform_.to_physical(*g, buffer_);
    g_lp = lp_norm(buffer_, grid_, p_);
  }

  if (records_.empty()) {
    forcing_lp_integral_.push_back(0.0);
  } else {
    const DiagnosticsRecord& prev = records_.back();
    const double h = t - prev.t;
    rec.cum_dissipation = prev.cum_dissipation + 0.5 * h * (dissipation_rate + last_dissipation_rate_);
    rec.cum_work = prev.cum_work + 0.5 * h * (work + last_work_rate_);
    forcing_lp_integral_.push_back(forcing_lp_integral_.back() + 0.5 * h * (g_lp + forcing_lp_.back()));
  }
  const double e0 = records_.empty() ? rec.energy : records_.front().energy;
  rec.balance_residual = rec.energy - e0 + rec.cum_dissipation - rec.cum_work;

  last_dissipation_rate_ = dissipation_rate;
  last_work_rate_ = work;
  forcing_lp_.push_back(g_lp);
  records_.push_back(rec);
  return records_.back();
}

}  // namespace vvl

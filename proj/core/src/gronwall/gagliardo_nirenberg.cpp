#include "vvl/gronwall/gagliardo_nirenberg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vvl/diagnostics/diagnostics.hpp"

namespace vvl {

namespace {

double gradient_norm_sq(const SpectralField& w) {
  const Grid& g = w.grid();
  double sum = 0.0;
  for (int row = 0; row < g.n(); ++row) {
    const int ky = g.wavenumber(row);
    for (int col = 0; col < g.columns(); ++col) {
      sum += g.column_weight(col) * (col * col + ky * ky) * std::norm(w.at(row, col));
    }
  }
  return 4.0 * std::numbers::pi * std::numbers::pi * sum;
}

SpectralField periodic_gaussian(const Grid& grid, double sigma) {
  SpectralField w(grid);
  for (int row = 0; row < grid.n(); ++row) {
    const int ky = grid.wavenumber(row);
    for (int col = 0; col < grid.columns(); ++col) {
      if (row == 0 && col == 0) continue;
      w.at(row, col) = std::exp(-0.5 * sigma * sigma * (col * col + ky * ky));
    }
  }
  return w;
}

}  // namespace

double gagliardo_nirenberg_quotient(const SpectralField& w, double p) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("gagliardo_nirenberg_quotient: p must lie in (1, 2)");
  if (std::abs(w.mean()) != 0.0) throw std::invalid_argument("gagliardo_nirenberg_quotient: field must be mean-zero");
  const double l2 = enstrophy(w);
  if (!(l2 > 0.0)) throw std::invalid_argument("gagliardo_nirenberg_quotient: field is zero");
  const double lp = lp_norm(w, p);
  return gradient_norm_sq(w) * std::pow(lp, 2.0 * p / (2.0 - p)) / std::pow(l2, 2.0 / (2.0 - p));
}

double estimate_gagliardo_nirenberg(double p, int n) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("estimate_gagliardo_nirenberg: p must lie in (1, 2)");
  const Grid grid(n);
  double best = INFINITY;

  SpectralField mode(grid);
  mode.set_mode(1, 0, Complex(0.0, -0.5));
  best = std::min(best, gagliardo_nirenberg_quotient(mode, p));
  mode.set_zero();
  mode.set_mode(1, 1, Complex(-0.25, 0.0));
  mode.set_mode(1, -1, Complex(0.25, 0.0));
  best = std::min(best, gagliardo_nirenberg_quotient(mode, p));

  // Golden-section search in log(sigma) between a few grid cells and the box size.
  auto quotient = [&](double log_sigma) {
    return gagliardo_nirenberg_quotient(periodic_gaussian(grid, std::exp(log_sigma)), p);
  };
  double lo = std::log(3.0 * grid.spacing());
  double hi = std::log(std::numbers::pi);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
  double f1 = quotient(x1), f2 = quotient(x2);
  best = std::min({best, quotient(lo), quotient(hi)});
  for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = quotient(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = quotient(x2);
    }
  }
  best = std::min({best, f1, f2});
  return 0.5 * best;
}

}  // namespace vvl

#include "vvl/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fmt/format.h>
#include <optional>
#include <thread>

#include "vvl/diagnostics/csv.hpp"
#include "vvl/harness/manifest.hpp"
#include "vvl/scenarios/initial_data.hpp"

namespace vvl {

namespace {

constexpr double kBoundSlack = 1e-3;

std::filesystem::path run_directory(const SimConfig& base, std::size_t index) {
  return std::filesystem::path(base.output_dir) / fmt::format("nu_{:02d}", index);
}

void write_partial(const SimConfig& base, const std::vector<std::optional<RunOutput>>& outputs) {
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (!outputs[i]) continue;
    std::filesystem::create_directories(run_directory(base, i));
    write_diagnostics_csv((run_directory(base, i) / "diagnostics.csv").string(), outputs[i]->records);
  }
}

}  // namespace

bool SweepResult::bounds_hold() const {
  return std::all_of(points.begin(), points.end(), [](const SweepPoint& p) { return p.bound_holds; });
}

bool SweepResult::dissipation_decreasing() const {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].measured_dissipation < points[i - 1].measured_dissipation)) return false;
  }
  return true;
}

bool SweepResult::comparisons_hold() const {
  return std::all_of(points.begin(), points.end(), [](const SweepPoint& p) { return p.comparison.holds; });
}

std::vector<BoundRow> SweepResult::bound_rows() const {
  std::vector<BoundRow> rows;
  for (const auto& p : points) {
    rows.push_back({p.nu, label, p.r_star, p.r_star_star, p.z0, p.bound, p.measured_dissipation});
  }
  return rows;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need two or more aligned points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: x values are all equal");
  LineFit fit{sxy / sxx, 0.0, 0.0};
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

SweepResult sweep(const SimConfig& base, std::span<const double> ladder, const SweepOptions& options) {
  if (ladder.size() < 4) throw std::invalid_argument("sweep: the nu ladder needs at least 4 points");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] > 0.0)) throw std::invalid_argument("sweep: nu values must be positive");
    if (i > 0 && !(ladder[i] < ladder[i - 1])) throw std::invalid_argument("sweep: nu ladder must be strictly decreasing");
  }
  std::vector<SimConfig> configs;
  for (double nu : ladder) {
    SimConfig c = base;
    c.nu = nu;
    c.validate();
    configs.push_back(c);
  }

  const Grid grid(base.n);
  const Forcing forcing(base.forcing, grid);
  const ForcingNorms norms = forcing.norms(base.horizon, base.p);

  std::vector<std::optional<RunOutput>> outputs(ladder.size());
  std::vector<std::exception_ptr> errors(ladder.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ladder.size(); i = next++) {
      try {
        SimState initial{0.0, make_initial_vorticity(configs[i].scenario, grid, configs[i].nu), configs[i].nu};
        outputs[i] = run(configs[i].run_settings(), std::move(initial), forcing.source());
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ladder.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) {
      if (options.write_outputs) write_partial(base, outputs);
      std::rethrow_exception(e);
    }
  }

  SweepResult result;
  result.base = base;
  result.ladder.assign(ladder.begin(), ladder.end());
  result.c_gn = resolve_gagliardo_nirenberg(base);

  double omega0_lp_sup = 0.0;
  for (const auto& out : outputs) omega0_lp_sup = std::max(omega0_lp_sup, out->records.front().lp_norm);
  result.constants = estimate_params(base.p, omega0_lp_sup, norms.l1_lp, norms.linf_l2, result.c_gn);

  std::vector<LadderPoint> ladder_points;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    ladder_points.push_back({ladder[i], ExtendedReal::finite(outputs[i]->records.front().enstrophy)});
  }
  result.label = classify_case(ladder_points, result.constants.A, result.constants.B, result.constants.alpha);

  std::vector<double> log_nu, log_d;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    const auto params = result.constants.at(ladder[i]);
    const double measured = outputs[i]->records.back().cum_dissipation;
    const double bound = case_bounds(result.label, base.horizon, params, ladder_points[i].z0);
    SweepPoint point{ladder[i],
                     std::move(*outputs[i]),
                     norms,
                     ladder_points[i].z0,
                     measured,
                     bound,
                     r_star(params),
                     r_star_star(params),
                     {},
                     measured <= 2.0 * bound * (1.0 + kBoundSlack)};
    point.comparison = enstrophy_comparison(point.output, params);
    log_nu.push_back(std::log(point.nu));
    log_d.push_back(std::log(point.measured_dissipation));
    result.points.push_back(std::move(point));
  }
  const auto fit = fit_line(log_nu, log_d);
  result.slope = fit.slope;
  result.intercept = fit.intercept;
  result.slope_residual = fit.residual;
  for (std::size_t i = 1; i < result.points.size(); ++i) {
    const SpectralField diff = result.points[i].output.final_state.omega - result.points[i - 1].output.final_state.omega;
    result.adjacent_l2.push_back(std::sqrt(kinetic_energy(diff)));
  }

  if (options.write_outputs) {
    const std::filesystem::path dir(base.output_dir);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < result.points.size(); ++i) {
      std::filesystem::create_directories(run_directory(base, i));
      write_diagnostics_csv((run_directory(base, i) / "diagnostics.csv").string(), result.points[i].output.records);
    }
    write_bound_table((dir / "bound_table.csv").string(), result.bound_rows());
    write_text_file((dir / "manifest.json").string(), sweep_manifest_json(result));
  }
  return result;
}

}  // namespace vvl

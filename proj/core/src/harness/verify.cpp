#include "vvl/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "vvl/diagnostics/diagnostics.hpp"
#include "vvl/gronwall/gronwall.hpp"
#include "vvl/harness/config.hpp"
#include "vvl/scenarios/forcing.hpp"
#include "vvl/scenarios/initial_data.hpp"
#include "vvl/spectral/operators.hpp"
#include "vvl/spectral/snapshot.hpp"
#include "vvl/spectral/stepper.hpp"
#include "vvl/spectral/transform.hpp"

namespace vvl {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome within(double value, double expected, double tol) {
  const double err = std::abs(value - expected);
  return {err <= tol, fmt::format("got {:.6g}, expected {:.6g} (err {:.2e}, tol {:.1e})", value, expected, err, tol)};
}

double max_difference(const SpectralField& a, const std::function<double(double, double)>& f) {
  Transform t(a.grid());
  const auto v = t.to_physical(a);
  const Grid& g = a.grid();
  double worst = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    for (int i = 0; i < g.n(); ++i) {
      worst = std::max(worst, std::abs(v[g.real_index(j, i)] - f(g.coordinate(i), g.coordinate(j))));
    }
  }
  return worst;
}

SpectralField from_function(const Grid& g, const std::function<double(double, double)>& f) {
  std::vector<double> v(g.real_size());
  for (int j = 0; j < g.n(); ++j) {
    for (int i = 0; i < g.n(); ++i) v[g.real_index(j, i)] = f(g.coordinate(i), g.coordinate(j));
  }
  Transform t(g);
  return t.to_spectral(v, true);
}

}  // namespace

std::vector<VerifyCheck> verify_suite() {
  std::vector<VerifyCheck> checks;
  auto add = [&](std::string module, std::string name, const std::function<Outcome()>& body) {
    VerifyCheck c{std::move(module), std::move(name), false, {}};
    try {
      const auto o = body();
      c.passed = o.passed;
      c.detail = o.detail;
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    checks.push_back(std::move(c));
  };
  const Grid grid(32);

  add("spectral_core", "biot_savart of zero is zero", [&] {
    const auto u = biot_savart(SpectralField(grid));
    return within(max_difference(u.x, [](double, double) { return 0.0; }) +
                      max_difference(u.y, [](double, double) { return 0.0; }),
                  0.0, 0.0);
  });
  add("spectral_core", "biot_savart of sin x is (0, -cos x)", [&] {
    const auto u = biot_savart(from_function(grid, [](double x, double) { return std::sin(x); }));
    return within(max_difference(u.x, [](double, double) { return 0.0; }) +
                      max_difference(u.y, [](double x, double) { return -std::cos(x); }),
                  0.0, 1e-13);
  });
  add("spectral_core", "biot_savart of Taylor-Green vorticity", [&] {
    const auto u = biot_savart(taylor_green(grid, 0.0, 0.0).omega);
    return within(max_difference(u.x, [](double x, double y) { return std::sin(x) * std::cos(y); }) +
                      max_difference(u.y, [](double x, double y) { return -std::cos(x) * std::sin(y); }),
                  0.0, 1e-13);
  });
  add("spectral_core", "curl of (0, sin x) is cos x", [&] {
    VectorField f{SpectralField(grid), from_function(grid, [](double x, double) { return std::sin(x); })};
    return within(max_difference(curl_of_force(f), [](double x, double) { return std::cos(x); }), 0.0, 1e-13);
  });
  add("spectral_core", "curl of a gradient vanishes", [&] {
    const auto phi = from_function(grid, [](double x, double y) { return std::sin(2 * x + y) + std::cos(x - 3 * y); });
    VectorField f{derivative_x(phi), derivative_y(phi)};
    return within(max_difference(curl_of_force(f), [](double, double) { return 0.0; }), 0.0, 1e-12);
  });
  add("spectral_core", "dealiasing is idempotent", [&] {
    auto a = power_spectrum_vorticity(grid, 0.5, 3);
    for (auto& c : a.coefficients()) c += Complex(0.1, 0.0);
    a.remove_mean();
    a.dealias();
    auto b = a;
    b.dealias();
    double diff = 0.0;
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) diff += std::abs(a.coefficients()[i] - b.coefficients()[i]);
    return within(diff, 0.0, 0.0);
  });
  add("spectral_core", "Taylor-Green step matches the exact decay", [&] {
    const double nu = 0.05;
    SimState s{0.0, taylor_green(grid, nu, 0.0).omega, nu};
    for (int i = 0; i < 20; ++i) s = step(s, 0.01, {});
    const double decay = std::exp(-2.0 * nu * s.t);
    return within(max_difference(s.omega, [&](double x, double y) { return 2.0 * decay * std::sin(x) * std::sin(y); }),
                  0.0, 1e-12);
  });
  add("spectral_core", "snapshot round trip", [&] {
    const auto snap = make_snapshot(power_spectrum_vorticity(grid, 2.0, 5), 0.25, 1e-3);
    std::stringstream buf;
    write_snapshot(buf, snap);
    const auto back = read_snapshot(buf);
    return Outcome{back.n == snap.n && back.t == snap.t && back.nu == snap.nu && back.values == snap.values,
                   "bitwise comparison"};
  });

  add("diagnostics", "Taylor-Green energy is 2 pi^2", [&] {
    return within(kinetic_energy(taylor_green(grid, 0.0, 0.0).omega), 2.0 * kPi * kPi, 1e-12);
  });
  add("diagnostics", "Taylor-Green enstrophy is 4 pi^2", [&] {
    return within(enstrophy(taylor_green(grid, 0.0, 0.0).omega), 4.0 * kPi * kPi, 1e-12);
  });
  add("diagnostics", "L2 norm of sin x from lp_norm", [&] {
    return within(lp_norm(from_function(grid, [](double x, double) { return std::sin(x); }), 2.0), std::sqrt(2.0) * kPi,
                  1e-12);
  });
  add("diagnostics", "trapezoid integral of t on [0, 1]", [&] {
    const std::vector<double> t{0.0, 0.25, 0.5, 0.75, 1.0};
    return within(cumulative_trapezoid(t, t).back(), 0.5, 1e-15);
  });

  add("gronwall", "R* = 1 for A = B = nu = 1", [&] { return within(r_star({1, 1, 4, 1}), 1.0, 1e-15); });
  add("gronwall", "R**/R* = 2^(2/7) for alpha = 4", [&] {
    const GronwallParams p(0.7, 2.3, 4.0, 1e-3);
    return within(r_star_star(p) / r_star(p), std::pow(2.0, 2.0 / 7.0), 1e-13);
  });
  add("gronwall", "Phi matches the closed form when B = 0", [&] {
    const GronwallParams p(1.3, 0.0, 4.0, 0.01);
    const double r = 2.5;
    const double exact = 1.0 / (p.A() * p.nu() * 3.0 * std::pow(r, 3.0));
    return within(capital_phi(r, p) / exact, 1.0, 1e-9);
  });
  add("gronwall", "Phi inverse round trip", [&] {
    const GronwallParams p(0.9, 1.7, 3.2, 0.02);
    const double r = 1.37 * r_star(p);
    return within(capital_phi_inverse(capital_phi(r, p), p).value() / r, 1.0, 1e-8);
  });
  add("gronwall", "supersolution from infinity with B = 0", [&] {
    const GronwallParams p(1.1, 0.0, 4.0, 0.05);
    const double t = 0.7, delta = 0.2;
    const double exact = std::pow(3.0 * p.A() * p.nu() * (t - delta), -1.0 / 3.0);
    return within(supersolution_m(t, ExtendedReal::infinity(), delta, p).value() / exact, 1.0, 1e-8);
  });
  add("gronwall", "supersolution at R* stays at R*", [&] {
    const GronwallParams p(1.0, 2.0, 4.0, 0.1);
    return within(supersolution_m(3.0, ExtendedReal::finite(r_star(p)), 0.0, p).value(), r_star(p), 0.0);
  });
  add("gronwall", "ladder with z0 = 3 R* is ABOVE", [&] {
    std::vector<LadderPoint> ladder;
    for (double nu : {1e-1, 1e-2, 1e-3, 1e-4}) ladder.push_back({nu, ExtendedReal::finite(3.0 * r_star({1, 1, 4, nu}))});
    const auto label = classify_case(ladder, 1, 1, 4);
    return Outcome{label == CaseLabel::Above, to_string(label)};
  });
  add("gronwall", "BELOW bound slope is 5/7", [&] {
    const double b1 = case_bounds(CaseLabel::Below, 1.0, {1, 1, 4, 1e-1}, ExtendedReal::finite(1.0));
    const double b5 = case_bounds(CaseLabel::Below, 1.0, {1, 1, 4, 1e-5}, ExtendedReal::finite(1.0));
    return within(std::log(b1 / b5) / std::log(1e4), 5.0 / 7.0, 1e-12);
  });
  add("gronwall", "estimate_params gives alpha = 4 at p = 3/2", [&] {
    const auto c = estimate_params(1.5, 2.0, 0.0, 1.0, 1.0);
    return within(c.alpha + std::abs(c.A - 2.0 * std::pow(2.0, -6.0)), 4.0, 1e-15);
  });

  add("scenarios", "low-mode forcing L2 norm is 2 pi s", [&] {
    ForcingSpec spec;
    spec.kind = ForcingKind::LowMode;
    spec.amplitude = 0.3;
    return within(std::sqrt(enstrophy(make_forcing(spec, grid, 0.77))), 2.0 * kPi * 0.3, 1e-13);
  });
  add("scenarios", "power spectrum is deterministic in the seed", [&] {
    const auto a = power_spectrum_vorticity(grid, 1.0, 42);
    const auto b = power_spectrum_vorticity(grid, 1.0, 42);
    return Outcome{std::equal(a.coefficients().begin(), a.coefficients().end(), b.coefficients().begin()),
                   "bitwise comparison"};
  });
  add("scenarios", "singular vortex is mean-zero and finite", [&] {
    const Grid g(64);
    const auto w = singular_vortex(g, 1.5, 7.0 / 6.0, 0.3);
    return Outcome{w.mean() == Complex(0.0, 0.0) && w.is_finite() && enstrophy(w) > 0.0,
                   fmt::format("enstrophy {:.6g}", enstrophy(w))};
  });

  add("harness", "config text round trip", [&] {
    SimConfig c;
    c.n = 64;
    c.nu = 2.5e-3;
    c.forcing.kind = ForcingKind::Rough;
    c.forcing.amplitude = 0.2;
    std::istringstream in(to_config_text(c));
    const auto back = parse_config(in);
    return Outcome{to_config_text(back) == to_config_text(c), "text comparison"};
  });
  add("harness", "malformed config names the field", [&] {
    std::istringstream in("[run]\nn = sixty-four\n");
    try {
      parse_config(in);
    } catch (const ConfigError& e) {
      const std::string what = e.what();
      return Outcome{what.find("run.n") != std::string::npos, what};
    }
    return Outcome{false, "no error raised"};
  });
  return checks;
}

void print_verify_table(std::ostream& out, std::span<const VerifyCheck> checks) {
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << fmt::format("{:<4} {:<14} {:<46} {}\n", c.passed ? "PASS" : "FAIL", c.module, c.name, c.detail);
    if (c.passed) ++passed;
  }
  out << fmt::format("{} of {} checks passed\n", passed, checks.size());
}

}  // namespace vvl

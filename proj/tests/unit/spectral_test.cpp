#include <gtest/gtest.h>

#include <cmath>
#include <utility>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "support/fields.hpp"
#include "vvl/diagnostics/diagnostics.hpp"
#include "vvl/scenarios/initial_data.hpp"
#include "vvl/spectral/operators.hpp"
#include "vvl/spectral/simulation.hpp"
#include "vvl/spectral/snapshot.hpp"
#include "vvl/spectral/stepper.hpp"
#include "vvl/spectral/transform.hpp"

namespace vvl {
namespace {

using testing::field_from;
using testing::max_coefficient_difference;
using testing::max_error;

constexpr double kPi = std::numbers::pi;

SpectralField random_field(const Grid& grid, std::uint64_t seed, double gamma = 1.0) {
  return power_spectrum_vorticity(grid, gamma, seed);
}

TEST(Grid, RejectsSmallOrOddSizes) {
  EXPECT_THROW(Grid(6), std::invalid_argument);
  EXPECT_THROW(Grid(33), std::invalid_argument);
  EXPECT_NO_THROW(Grid(8));
}

TEST(Grid, HalfSpectrumLayout) {
  const Grid g(16);
  EXPECT_EQ(g.columns(), 9);
  EXPECT_EQ(g.wavenumber(0), 0);
  EXPECT_EQ(g.wavenumber(8), 8);
  EXPECT_EQ(g.wavenumber(9), -7);
  EXPECT_EQ(g.wavenumber(15), -1);
  EXPECT_EQ(g.row_of(-1), 15);
  EXPECT_EQ(g.derivative_wavenumber(8), 0);
  EXPECT_EQ(g.column_weight(0), 1.0);
  EXPECT_EQ(g.column_weight(8), 1.0);
  EXPECT_EQ(g.column_weight(3), 2.0);
}

TEST(Grid, TwoThirdsRule) {
  const Grid g(32);
  EXPECT_EQ(g.retained_max(), 10);
  EXPECT_TRUE(g.retained(10, -10));
  EXPECT_FALSE(g.retained(11, 0));
  EXPECT_FALSE(g.retained(0, -11));
}

TEST(SpectralField, SetModeWritesTheConjugatePartner) {
  const Grid g(16);
  SpectralField f(g);
  f.set_mode(0, 3, Complex(1.0, 2.0));
  EXPECT_EQ(f.mode(0, -3), Complex(1.0, -2.0));
  f.set_mode(-2, 5, Complex(0.5, 0.25));
  EXPECT_EQ(f.mode(2, -5), Complex(0.5, -0.25));
  EXPECT_EQ(f.hermitian_defect(), 0.0);
  EXPECT_THROW(f.set_mode(0, 0, 1.0), std::invalid_argument);
}

TEST(SpectralField, EnforceHermitianRestoresSymmetry) {
  const Grid g(16);
  SpectralField f(g);
  f.at(g.row_of(2), 0) = Complex(1.0, 1.0);
  f.at(g.row_of(-2), 0) = Complex(3.0, 0.0);
  EXPECT_GT(f.hermitian_defect(), 0.0);
  f.enforce_hermitian();
  EXPECT_EQ(f.hermitian_defect(), 0.0);
  EXPECT_EQ(f.mode(0, 2), Complex(2.0, 0.5));
}

TEST(Transform, UnitNormalization) {
  const Grid g(16);
  const auto one = field_from(g, [](double, double) { return 1.0; }, false);
  EXPECT_NEAR(one.mean().real(), 1.0, 1e-15);
  const auto s = field_from(g, [](double x, double) { return std::sin(x); });
  EXPECT_NEAR(std::abs(s.mode(1, 0) - Complex(0.0, -0.5)), 0.0, 1e-15);
}

TEST(Transform, RoundTripOfRandomFields) {
  const Grid g(32);
  Transform t(g);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  std::vector<double> v(g.real_size());
  for (auto& x : v) x = normal(rng);
  const auto f = t.to_spectral(v, false);
  const auto back = t.to_physical(f);
  for (std::size_t i = 0; i < v.size(); ++i) ASSERT_NEAR(back[i], v[i], 1e-13);
}

TEST(Transform, IndependentInstancesRunConcurrently) {
  const Grid g(64);
  const auto f = random_field(g, 9);
  const auto serial = testing::physical(f);
  std::vector<std::vector<double>> results(4);
  {
    std::vector<std::jthread> pool;
    for (int k = 0; k < 4; ++k) {
      pool.emplace_back([&, k] {
        Transform t(g);
        for (int rep = 0; rep < 20; ++rep) results[k] = t.to_physical(f);
      });
    }
  }
  for (const auto& r : results) EXPECT_EQ(r, serial);
}

TEST(BiotSavart, ZeroVorticityGivesZeroVelocity) {
  const Grid g(16);
  const auto u = biot_savart(SpectralField(g));
  EXPECT_EQ(max_error(u.x, [](double, double) { return 0.0; }), 0.0);
  EXPECT_EQ(max_error(u.y, [](double, double) { return 0.0; }), 0.0);
}

TEST(BiotSavart, SinXGivesMinusCosXInY) {
  const Grid g(16);
  const auto u = biot_savart(field_from(g, [](double x, double) { return std::sin(x); }));
  EXPECT_LT(max_error(u.x, [](double, double) { return 0.0; }), 1e-14);
  EXPECT_LT(max_error(u.y, [](double x, double) { return -std::cos(x); }), 1e-14);
}

TEST(BiotSavart, TaylorGreenVelocity) {
  const Grid g(32);
  const auto u = biot_savart(field_from(g, [](double x, double y) { return 2.0 * std::sin(x) * std::sin(y); }));
  EXPECT_LT(max_error(u.x, [](double x, double y) { return std::sin(x) * std::cos(y); }), 1e-14);
  EXPECT_LT(max_error(u.y, [](double x, double y) { return -std::cos(x) * std::sin(y); }), 1e-14);
}

TEST(BiotSavart, VelocityIsDivergenceFreeWithCurlEqualToVorticity) {
  const Grid g(32);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto w = random_field(g, seed);
    const auto u = biot_savart(w);
    const auto div = derivative_x(u.x) + derivative_y(u.y);
    EXPECT_LT(testing::max_error(div, [](double, double) { return 0.0; }), 1e-12);
    const auto curl = curl_of_force(u);
    EXPECT_LT(max_coefficient_difference(curl, w), 1e-14);
  }
}

TEST(BiotSavart, RejectsNonzeroMean) {
  const Grid g(16);
  const auto w = field_from(g, [](double x, double) { return 1.0 + std::sin(x); }, false);
  EXPECT_THROW(biot_savart(w), std::invalid_argument);
}

TEST(CurlOfForce, SinXInYGivesCosX) {
  const Grid g(16);
  VectorField f{SpectralField(g), field_from(g, [](double x, double) { return std::sin(x); })};
  EXPECT_LT(max_error(curl_of_force(f), [](double x, double) { return std::cos(x); }), 1e-14);
}

TEST(CurlOfForce, GradientsAreCurlFree) {
  const Grid g(32);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto phi = random_field(g, seed, 2.0);
    VectorField f{derivative_x(phi), derivative_y(phi)};
    EXPECT_LT(max_error(curl_of_force(f), [](double, double) { return 0.0; }), 1e-13);
  }
}

TEST(CurlOfForce, InvertsForceFromVorticitySource) {
  const Grid g(32);
  const auto w = random_field(g, 77);
  EXPECT_LT(max_coefficient_difference(curl_of_force(force_from_vorticity_source(w)), w), 1e-14);
}

TEST(Dealias, IsIdempotentAndKeepsTheBand) {
  const Grid g(48);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> v(g.real_size());
    for (auto& x : v) x = normal(rng);
    Transform t(g);
    auto once = t.to_spectral(v, true);
    const auto raw = once;
    once.dealias();
    auto twice = once;
    twice.dealias();
    EXPECT_EQ(max_coefficient_difference(once, twice), 0.0);
    for (int row = 0; row < g.n(); ++row) {
      for (int col = 0; col < g.columns(); ++col) {
        const bool keep = g.retained(col, g.wavenumber(row));
        EXPECT_EQ(once.at(row, col), keep ? raw.at(row, col) : Complex(0.0, 0.0));
      }
    }
  }
}

TEST(NonlinearTerm, VanishesForTaylorGreen) {
  const Grid g(32);
  const auto n = nonlinear_term(taylor_green(g, 0.0, 0.0).omega);
  EXPECT_LT(max_error(n, [](double, double) { return 0.0; }), 1e-14);
}

TEST(NonlinearTerm, MatchesAnalyticAdvection) {
  const Grid g(32);
  // omega = sin x cos 2y + cos(3x + y); stream phi with -Lap phi = omega, u = (d_y phi, -d_x phi).
  auto omega = [](double x, double y) { return std::sin(x) * std::cos(2 * y) + std::cos(3 * x + y); };
  auto ux = [](double x, double y) { return -2.0 * std::sin(x) * std::sin(2 * y) / 5.0 - std::sin(3 * x + y) / 10.0; };
  auto uy = [](double x, double y) { return -std::cos(x) * std::cos(2 * y) / 5.0 + 3.0 * std::sin(3 * x + y) / 10.0; };
  auto wx = [](double x, double y) { return std::cos(x) * std::cos(2 * y) - 3.0 * std::sin(3 * x + y); };
  auto wy = [](double x, double y) { return -2.0 * std::sin(x) * std::sin(2 * y) - std::sin(3 * x + y); };
  const auto n = nonlinear_term(field_from(g, omega));
  EXPECT_LT(max_error(n, [&](double x, double y) { return ux(x, y) * wx(x, y) + uy(x, y) * wy(x, y); }), 1e-13);
}

TEST(Stepper, TaylorGreenIsExact) {
  const Grid g(32);
  for (double nu : {0.0, 0.01, 0.5}) {
    SimState s{0.0, taylor_green(g, nu, 0.0).omega, nu};
    IfRk4Stepper stepper(g, nu);
    for (int i = 0; i < 50; ++i) stepper.step(s, 0.02, {});
    const double decay = std::exp(-2.0 * nu * s.t);
    EXPECT_NEAR(s.t, 1.0, 1e-14);
    EXPECT_LT(max_error(s.omega, [&](double x, double y) { return 2.0 * decay * std::sin(x) * std::sin(y); }), 1e-13);
  }
}

// g = sin x drives omega(t) = (1 - e^{-nu t})/nu sin x; the shear has no self-advection.
double steady_shear_error(int steps) {
  const Grid g(16);
  const double nu = 0.3;
  const auto source = field_from(g, [](double x, double) { return std::sin(x); });
  ForcingSource forcing = [&](double, SpectralField& out) { out = source; };
  SimState s{0.0, SpectralField(g), nu};
  for (int i = 0; i < steps; ++i) s = step(s, 2.0 / steps, forcing);
  const double amp = (1.0 - std::exp(-nu * s.t)) / nu;
  return max_error(s.omega, [&](double x, double) { return amp * std::sin(x); });
}

TEST(Stepper, SteadyShearForcingConvergesAtFourthOrder) {
  const double coarse = steady_shear_error(40), fine = steady_shear_error(80);
  EXPECT_LT(coarse, 1e-10);
  EXPECT_NEAR(coarse / fine, 16.0, 2.0);
}

// Relative drift of (energy, enstrophy) after integrating to t = 2 at the given CFL number.
std::pair<double, double> inviscid_drift(double cfl) {
  const Grid g(32);
  auto w = random_field(g, 21, 3.0);
  w.dealias();
  SimState s{0.0, w, 0.0};
  const double e0 = kinetic_energy(s.omega), z0 = enstrophy(s.omega);
  IfRk4Stepper stepper(g, 0.0);
  while (s.t < 2.0) stepper.advance(s, 2.0 - s.t, cfl, {});
  return {std::abs(kinetic_energy(s.omega) / e0 - 1.0), std::abs(enstrophy(s.omega) / z0 - 1.0)};
}

TEST(Stepper, InviscidRunConservesEnergyAndEnstrophy) {
  // Spatially exact conservation; what remains is RK4 time error, shrinking at fourth order.
  const auto coarse = inviscid_drift(0.4), fine = inviscid_drift(0.2);
  EXPECT_LT(coarse.first, 1e-6);
  EXPECT_LT(coarse.second, 1e-6);
  EXPECT_GT(coarse.second / fine.second, 10.0);
}

TEST(Stepper, ViscousUnforcedEnstrophyNeverIncreases) {
  const Grid g(32);
  RunSettings settings;
  settings.horizon = 2.0;
  settings.cadence = 0.05;
  SimState s{0.0, random_field(g, 4, 1.5), 0.02};
  const auto out = run(settings, s, {});
  for (std::size_t i = 1; i < out.records.size(); ++i) {
    EXPECT_LE(out.records[i].enstrophy, out.records[i - 1].enstrophy);
  }
}

TEST(Stepper, NonFiniteStateRaisesInstabilityWithTime) {
  const Grid g(16);
  ForcingSource bad = [](double t, SpectralField& out) {
    out.set_zero();
    if (t > 0.25) out.set_mode(1, 0, Complex(NAN, 0.0));
  };
  SimState s{0.0, taylor_green(g, 0.1, 0.0).omega, 0.1};
  IfRk4Stepper stepper(g, 0.1);
  try {
    for (int i = 0; i < 10; ++i) stepper.step(s, 0.1, bad);
    FAIL() << "no instability reported";
  } catch (const SolverInstability& e) {
    EXPECT_GT(e.time(), 0.2);
  }
}

TEST(Simulation, SampleTimesSpanTheHorizon) {
  const auto t = sample_times(1.0, 0.3);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t.front(), 0.0);
  EXPECT_EQ(t.back(), 1.0);
  EXPECT_THROW(sample_times(0.0, 0.1), std::invalid_argument);
}

TEST(Simulation, RunsAreDeterministicAndLandOnSamples) {
  const Grid g(32);
  RunSettings settings;
  settings.horizon = 0.5;
  settings.cadence = 0.05;
  const SimState s{0.0, random_field(g, 8, 1.5), 1e-3};
  std::size_t seen = 0;
  const auto a = run(settings, s, {}, [&](const SimState&, const DiagnosticsRecord&) { ++seen; });
  const auto b = run(settings, s, {});
  ASSERT_EQ(a.records.size(), 11u);
  EXPECT_EQ(seen, 11u);
  const auto times = sample_times(0.5, 0.05);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].t, times[i]);
    EXPECT_EQ(a.records[i].enstrophy, b.records[i].enstrophy);
  }
  EXPECT_EQ(max_coefficient_difference(a.final_state.omega, b.final_state.omega), 0.0);
}

TEST(Snapshot, RoundTripsAndUsesTheDocumentedLayout) {
  const Grid g(16);
  const auto snap = make_snapshot(random_field(g, 2), 0.75, 1e-3);
  std::stringstream buf;
  write_snapshot(buf, snap);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 4u + 4u + 8u + 8u + 16u * 16u * 8u);
  EXPECT_EQ(bytes.substr(0, 4), "VVF1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 16u);
  EXPECT_EQ(bytes[5], 0);
  const auto back = read_snapshot(buf);
  EXPECT_EQ(back.n, 16u);
  EXPECT_EQ(back.t, 0.75);
  EXPECT_EQ(back.nu, 1e-3);
  EXPECT_EQ(back.values, snap.values);
}

TEST(Snapshot, RejectsBadMagicAndTruncation) {
  const Grid g(16);
  std::stringstream buf;
  write_snapshot(buf, make_snapshot(random_field(g, 2), 0.0, 0.0));
  std::string bytes = buf.str();
  std::istringstream truncated(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(read_snapshot(truncated), std::runtime_error);
  bytes[0] = 'X';
  std::istringstream bad(bytes);
  EXPECT_THROW(read_snapshot(bad), std::runtime_error);
}

}  // namespace
}  // namespace vvl

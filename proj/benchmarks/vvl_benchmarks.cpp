#include <benchmark/benchmark.h>

#include "vvl/gronwall/gronwall.hpp"
#include "vvl/scenarios/initial_data.hpp"
#include "vvl/spectral/operators.hpp"
#include "vvl/spectral/stepper.hpp"
#include "vvl/spectral/transform.hpp"

namespace {

using namespace vvl;

void BM_TransformRoundTrip(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)));
  Transform transform(grid);
  const auto omega = power_spectrum_vorticity(grid, 2.0, 1);
  std::vector<double> values(grid.real_size());
  std::vector<Complex> coeffs(grid.spectral_size());
  for (auto _ : state) {
    transform.to_physical(omega, values);
    transform.to_spectral(values, coeffs);
    benchmark::DoNotOptimize(coeffs.data());
  }
}
BENCHMARK(BM_TransformRoundTrip)->Arg(128)->Arg(256)->Arg(512);

void BM_NonlinearTerm(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)));
  NonlinearTerm term(grid);
  const auto omega = power_spectrum_vorticity(grid, 2.0, 1);
  SpectralField out(grid);
  for (auto _ : state) {
    term.evaluate(omega, out);
    benchmark::DoNotOptimize(out.coefficients().data());
  }
}
BENCHMARK(BM_NonlinearTerm)->Arg(128)->Arg(256)->Arg(512);

void BM_Step(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)));
  IfRk4Stepper stepper(grid, 1e-3);
  SimState s{0.0, power_spectrum_vorticity(grid, 2.0, 1, 1.0), 1e-3};
  for (auto _ : state) {
    stepper.step(s, 1e-3, {});
    benchmark::DoNotOptimize(s.omega.coefficients().data());
  }
}
BENCHMARK(BM_Step)->Arg(128)->Arg(256);

void BM_CapitalPhi(benchmark::State& state) {
  const GronwallParams params(1.0, 1.0, 4.0, 1e-3);
  const double r = 3.0 * r_star(params);
  for (auto _ : state) benchmark::DoNotOptimize(capital_phi(r, params));
}
BENCHMARK(BM_CapitalPhi);

void BM_CapitalPhiInverse(benchmark::State& state) {
  const GronwallParams params(1.0, 1.0, 4.0, 1e-3);
  const double y = capital_phi(3.0 * r_star(params), params);
  for (auto _ : state) benchmark::DoNotOptimize(capital_phi_inverse(y, params));
}
BENCHMARK(BM_CapitalPhiInverse);

}  // namespace

BENCHMARK_MAIN();

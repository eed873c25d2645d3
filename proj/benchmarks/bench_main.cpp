#include <benchmark/benchmark.h>

#include "driftcas/lifshitz.hpp"
#include "driftcas/nonlocal.hpp"
#include "driftcas/phys.hpp"
#include "driftcas/reflection.hpp"

using namespace driftcas;

namespace {

const double xi1 = phys::matsubara_xi(1, 300.0);

void BM_DriftAmplitudes(benchmark::State& state) {
  const auto spec = germanium();
  const auto st = material_state(spec, 300.0);
  double k = 1e2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(amplitudes(model::Drift{}, Mode{xi1, k}, spec, st));
    k = k < 1e6 ? k * 1.01 : 1e2;
  }
}
BENCHMARK(BM_DriftAmplitudes);

void BM_NonlocalH(benchmark::State& state) {
  const auto spec = germanium();
  const auto st = material_state(spec, 300.0);
  const auto tensor = nonlocal::drift_tensor(spec, st);
  const auto method = state.range(0) == 0 ? nonlocal::Method::Closed : nonlocal::Method::Quadrature;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonlocal::h_integrals(tensor, Mode{10.0 * xi1, 1e4}, method));
  }
  state.SetLabel(state.range(0) == 0 ? "closed" : "quadrature");
}
BENCHMARK(BM_NonlocalH)->Arg(0)->Arg(1);

void BM_FreeEnergy(benchmark::State& state) {
  const double d = static_cast<double>(state.range(0)) * 1e-4;
  const Geometry g = identical_plates(germanium(), model::Drift{}, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_energy_per_area(g, 300.0).value);
  }
  state.SetLabel("d_um=" + std::to_string(state.range(0)));
}
BENCHMARK(BM_FreeEnergy)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

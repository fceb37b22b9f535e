// Serial reference vs OpenMP kernels on the grid sweeps that dominate runtime.
#include <benchmark/benchmark.h>

#include "hsl/darboux.hpp"
#include "hsl/export.hpp"
#include "hsl/fixtures.hpp"
#include "hsl/verify.hpp"

using namespace hsl;

namespace {

const HslTorus& torus() {
  static const HslTorus t = fixtures::castro_urbano();
  return t;
}

void BM_Sample(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const SurfaceFn fn = [](Cx z) { return torus().position(z); };
  for (auto _ : state) benchmark::DoNotOptimize(sample(fn, torus().lattice(), n, n, parallel));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_SamplePoly(benchmark::State& state, bool parallel) {
  static const HslTorus r2 = fixtures::r2_torus();
  static const DarbouxSurface d =
      darboux_poly(r2, Cx(0.5, 0.5), {{M_PI - std::atan(0.75), 1.0}, {1.5 * M_PI, Cx(0.3, 0.2)}});
  const int n = static_cast<int>(state.range(0));
  const SurfaceFn fn = [](Cx z) { return d.position(z); };
  for (auto _ : state) benchmark::DoNotOptimize(sample(fn, r2.lattice(), n, n, parallel));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_Conformal(benchmark::State& state, bool parallel) {
  FdOptions o;
  o.grid_n = static_cast<int>(state.range(0));
  o.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(check_conformal_lagrangian(torus(), o));
  state.SetItemsProcessed(state.iterations() * o.grid_n * o.grid_n);
}

void BM_HslPreservation(benchmark::State& state, bool parallel) {
  const Spectrum sp(torus().lattice(), torus().beta0());
  const DarbouxSurface d = darboux_mono(torus(), sp.eta(Cx(1.4, -0.6)), 0);
  FdOptions o;
  o.grid_n = static_cast<int>(state.range(0));
  o.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(check_hsl_preservation(d, o));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Sample, serial, false)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sample, omp, true)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SamplePoly, serial, false)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SamplePoly, omp, true)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Conformal, serial, false)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Conformal, omp, true)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HslPreservation, serial, false)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HslPreservation, omp, true)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

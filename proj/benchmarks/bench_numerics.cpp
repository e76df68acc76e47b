#include <benchmark/benchmark.h>

#include <cmath>

#include "slitflow/condensation_front.hpp"
#include "slitflow/numerics/erfc.hpp"
#include "slitflow/numerics/quadrature.hpp"

namespace {

using namespace slitflow;

const MediumParams kMedium(1e-3, 1e-6);
const FluidParams kFluid(5304.0, 2339.0, 1.4e-5, 120.0);
const BoundaryConditions kBc(313.15, 293.15, 5e5, 101325.0, 1e-3);

void BM_Erfc(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::erfc(x));
    x = x > 6.0 ? 0.0 : x + 0.01;
  }
}
BENCHMARK(BM_Erfc);

void BM_Integrate(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        numerics::integrate([](double s) { return std::exp(-s * s); }, 0.0,
                            1.0, tol));
  }
}
BENCHMARK(BM_Integrate)->Arg(6)->Arg(10)->Arg(13);

void BM_RecessionSpeed(benchmark::State& state) {
  const double t = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        recession_speed(kMedium, kFluid, kBc, 2.5e-4, t, 1e-12));
  }
}
BENCHMARK(BM_RecessionSpeed)->Arg(-1)->Arg(1)->Arg(3);

void BM_AdvanceFront(benchmark::State& state) {
  SimConfig cfg;
  cfg.recession_model = static_cast<RecessionModel>(state.range(0));
  cfg.recession_constant = 0.9267;
  cfg.t_end = 50.0;
  cfg.output_times = {10.0, 50.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(advance_front(kMedium, kFluid, kBc, cfg, 0.5, 50.0));
  }
}
BENCHMARK(BM_AdvanceFront)
    ->Arg(static_cast<int>(RecessionModel::full))
    ->Arg(static_cast<int>(RecessionModel::asymptotic))
    ->Arg(static_cast<int>(RecessionModel::constant))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

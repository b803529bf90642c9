#include "selfenergy/report.hpp"
#include "selfenergy/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace selfenergy;

namespace {

const std::vector<double> &omega_p_d() {
  static const auto g = sweep::parse_grid(report::figure2_default_grid).points();
  return g;
}

const sweep::ShiftSpec &plasma_spec() {
  static const sweep::ShiftSpec s{DielectricModel::plasma(1.0), Geometry(1.0), {1.0, 1.0},
                                  {}, default_tolerance, MethodRequest::Quadrature};
  return s;
}

const std::vector<double> &distances() {
  static const auto g = sweep::parse_grid("0.05:50:256:log").points();
  return g;
}

void figure2_serial(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sweep::figure2_serial(omega_p_d(), report::figure2_omega_t_d, default_tolerance));
}

void figure2_parallel(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sweep::figure2_parallel(omega_p_d(), report::figure2_omega_t_d, default_tolerance));
}

void sweep_serial(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::shifts_serial(plasma_spec(), sweep::Parameter::D, distances()));
}

void sweep_parallel(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sweep::shifts_parallel(plasma_spec(), sweep::Parameter::D, distances()));
}

} // namespace

BENCHMARK(figure2_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(figure2_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

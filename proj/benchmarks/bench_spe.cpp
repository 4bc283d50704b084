#include <benchmark/benchmark.h>

#include "spe/circuits.hpp"
#include "spe/gates.hpp"
#include "spe/pulse.hpp"
#include "spe/tomography.hpp"
#include "spe/weyl.hpp"

using namespace spe;

static void BM_CartanCoordinates(benchmark::State& state) {
  Rng rng(1);
  Unitary2Q u(random_unitary(4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(cartan_coordinates(u));
}
BENCHMARK(BM_CartanCoordinates);

static void BM_KakDecompose(benchmark::State& state) {
  Rng rng(2);
  Unitary2Q u(random_unitary(4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(kak_decompose(u));
}
BENCHMARK(BM_KakDecompose);

static void BM_EntanglingPowerMC(benchmark::State& state) {
  Unitary2Q b = named_gate("b");
  for (auto _ : state) benchmark::DoNotOptimize(entangling_power_mc(b, static_cast<std::uint64_t>(state.range(0)), 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EntanglingPowerMC)->Arg(1000)->Arg(100000);

static void BM_RunStateW(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Circuit c = build_w(n);
  ComplexVector zero = basis_state(std::string(static_cast<std::size_t>(n), '0'));
  for (auto _ : state) benchmark::DoNotOptimize(run_state(c, zero));
}
BENCHMARK(BM_RunStateW)->DenseRange(4, 12, 4);

static void BM_RunDensityNoisy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Circuit c = build_ghz(n);
  NoiseModel nm;
  nm.depol_1q = 0.001;
  nm.depol_2q = 0.02;
  auto rho = DensityMatrix::from_pure(basis_state(std::string(static_cast<std::size_t>(n), '0')));
  for (auto _ : state) benchmark::DoNotOptimize(run_density(c, rho, nm));
}
BENCHMARK(BM_RunDensityNoisy)->DenseRange(2, 5, 1);

static void BM_StateTomography(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Circuit c = build_w(n);
  auto in = DensityMatrix::from_pure(basis_state(std::string(static_cast<std::size_t>(n), '0')));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_state(c, in, 8192, {}, 3));
}
BENCHMARK(BM_StateTomography)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

static void BM_ProcessTomography(benchmark::State& state) {
  Circuit c = build_spe_circuit(SpeVariant::A, kPi / 2);
  for (auto _ : state) benchmark::DoNotOptimize(process_tomography(c, std::nullopt, {}, 0));
}
BENCHMARK(BM_ProcessTomography)->Unit(benchmark::kMillisecond);

static void BM_PulseSchedule(benchmark::State& state) {
  Calibration cal;
  cal.cr = {cplx(0.2, 0), 64, 768, 1024};
  cal.rotary = {cplx(0.05, 0), 64, 768, 1024};
  cal.x_pulse_duration = cal.sx_pulse_duration = 160;
  for (auto _ : state) benchmark::DoNotOptimize(duration_ratio(cal, kPi / 2));
}
BENCHMARK(BM_PulseSchedule);
BENCHMARK_MAIN();

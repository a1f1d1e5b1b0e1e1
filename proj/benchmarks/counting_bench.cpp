#include <benchmark/benchmark.h>

#include "burnside/counting.hpp"
#include "burnside/number_theory.hpp"
#include "burnside/verifiers.hpp"

using namespace burnside;

static void BM_ClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_orbit_count(n, 4));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(4)->Range(4, 4096);

static void BM_GeneralBurnside(benchmark::State& state) {
  const auto group = dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(burnside_orbit_count(group, 4));
}
BENCHMARK(BM_GeneralBurnside)->RangeMultiplier(4)->Range(4, 1024);

static void BM_BruteForceOrbits(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_orbit_count(n, 4));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(space_size(n, 4)));
}
BENCHMARK(BM_BruteForceOrbits)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_EulerPhi(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_phi(n));
    n = n % 100'000 + 1;
  }
}
BENCHMARK(BM_EulerPhi);

static void BM_FermatModular(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_fermat_modular(-97, 13, 3));
}
BENCHMARK(BM_FermatModular);
BENCHMARK_MAIN();

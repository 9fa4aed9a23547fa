// Serial reference vs OpenMP kernels on random terrain.
#include "swegen/kernels.hpp"
#include "swegen/scenario.hpp"
#include "swegen/solver.hpp"

#include <benchmark/benchmark.h>

using namespace swegen;

namespace {

Scenario terrain(std::size_t n) {
    ScenarioSpec spec;
    spec.seed = 1;
    spec.params = RandomTerrainParams{};
    spec.grid = GridSpec::unit_square(n);
    return make_scenario(spec);
}

void spatial(benchmark::State& state, Execution exec) {
    const Scenario sc = terrain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(spatial_operator(sc.ic, sc.bathy, sc.config(), exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sc.grid().cells()));
}

void step(benchmark::State& state, Execution exec) {
    const Scenario sc = terrain(static_cast<std::size_t>(state.range(0)));
    const double dt = stable_dt(sc.ic, sc.config(), exec);
    for (auto _ : state)
        benchmark::DoNotOptimize(rk2_step(sc.ic, sc.bathy, sc.config(), dt, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sc.grid().cells()));
}

void BM_SpatialSerial(benchmark::State& s) { spatial(s, Execution::serial); }
void BM_SpatialParallel(benchmark::State& s) { spatial(s, Execution::parallel); }
void BM_Rk2Serial(benchmark::State& s) { step(s, Execution::serial); }
void BM_Rk2Parallel(benchmark::State& s) { step(s, Execution::parallel); }

}  // namespace

BENCHMARK(BM_SpatialSerial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpatialParallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Rk2Serial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rk2Parallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

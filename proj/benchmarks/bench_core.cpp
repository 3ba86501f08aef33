#include <benchmark/benchmark.h>

#include "ns1d/diagnostics.hpp"
#include "ns1d/identities.hpp"
#include "ns1d/solver.hpp"

using namespace ns1d;

namespace {

State smooth_state(const Grid& grid) {
    SmoothFieldSpec spec;
    spec.seed = 7;
    return make_smooth_state(spec, grid);
}

void BM_Rhs(benchmark::State& bench) {
    const Grid grid = Grid::make(static_cast<int>(bench.range(0)), 10.0);
    const State s = smooth_state(grid);
    const GasParams gas;
    const TransportLaw law;
    for (auto _ : bench) {
        benchmark::DoNotOptimize(rhs(s, grid, gas, law));
    }
    bench.SetItemsProcessed(bench.iterations() * grid.n);
}
BENCHMARK(BM_Rhs)->Arg(256)->Arg(1024)->Arg(4096);

void BM_Step(benchmark::State& bench) {
    const Grid grid = Grid::make(static_cast<int>(bench.range(0)), 10.0);
    State s = smooth_state(grid);
    const GasParams gas;
    const TransportLaw law;
    const StepControl ctl;
    const double dt = stable_dt(s, grid, gas, law, ctl);
    for (auto _ : bench) {
        s = step(s, dt, grid, gas, law, ctl);
    }
    bench.SetItemsProcessed(bench.iterations() * grid.n);
}
BENCHMARK(BM_Step)->Arg(256)->Arg(1024)->Arg(4096);

void BM_IdentityResidual(benchmark::State& bench) {
    const Grid grid = Grid::make(512, 10.0);
    const State s = smooth_state(grid);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(
            evaluate_identity(IdentityId::i2_14, s, TransportLaw{}, GasParams{}, grid));
    }
}
BENCHMARK(BM_IdentityResidual);

void BM_KanelPsi(benchmark::State& bench) {
    double v = 1e-6;
    for (auto _ : bench) {
        benchmark::DoNotOptimize(kanel_psi(v));
        v = v < 1e6 ? v * 1.7 : 1e-6;
    }
}
BENCHMARK(BM_KanelPsi);

void BM_Record(benchmark::State& bench) {
    const Grid grid = Grid::make(512, 10.0);
    const State s = smooth_state(grid);
    const GasParams gas;
    const TransportLaw law;
    const DissipationAccumulator acc =
        DissipationAccumulator::from_initial(s, grid, gas, law);
    for (auto _ : bench) {
        benchmark::DoNotOptimize(record(s, grid, gas, law, acc));
    }
}
BENCHMARK(BM_Record);

} // namespace

BENCHMARK_MAIN();

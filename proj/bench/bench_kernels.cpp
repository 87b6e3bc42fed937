// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "relbell/kernels.hpp"

namespace {

using relbell::Execution;

Execution exec_of(benchmark::State const& st)
{
    return st.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_WignerScan(benchmark::State& st)
{
    auto const betas = relbell::beta_grid(0.0, 0.99, 20000);
    std::vector<double> const series{10.0, 100.0, 1000.0};
    for (auto _ : st) benchmark::DoNotOptimize(relbell::wigner_scan(betas, series, exec_of(st)));
}
BENCHMARK(BM_WignerScan)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_OracleSweep(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(relbell::little_group_oracle_sweep(100000, 42, exec_of(st)));
}
BENCHMARK(BM_OracleSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ChshScanOptimal(benchmark::State& st)
{
    relbell::ChshScanSpec spec;
    spec.vectors = relbell::VectorChoice::optimal;
    spec.betas = relbell::beta_grid(0.0, 0.95, 16);
    spec.optimizer.restarts = 4;
    spec.optimizer.tol = 1e-7;
    for (auto _ : st) benchmark::DoNotOptimize(relbell::chsh_scan(spec, exec_of(st)));
}
BENCHMARK(BM_ChshScanOptimal)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

// Microbenchmarks for the two solution routes.

#include "chiralpb/liouville.hpp"
#include "chiralpb/truncated.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace chiralpb;

SystemParams reference_point()
{
    SystemParams p;
    p.kappa_a = p.kappa_b = 2.5;
    p.g_a = 2.0;
    p.delta_c = p.delta_m = 2.0;
    p.o_drive = 0.01;
    return with_drive(p, optimal_drive(p));
}

void BM_BuildLiouvillian(benchmark::State& state)
{
    const SystemParams p = reference_point();
    const FockSpace space = FockSpace::three_mode(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_model_liouvillian(p, space));
    }
}
BENCHMARK(BM_BuildLiouvillian)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SteadyState(benchmark::State& state)
{
    const Superoperator l =
        build_model_liouvillian(reference_point(), FockSpace::three_mode(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(steady_state(l));
    }
}
BENCHMARK(BM_SteadyState)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state)
{
    const SystemParams p = reference_point();
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_amplitudes(p));
    }
}
BENCHMARK(BM_ClosedForm);

void BM_TruncatedSolve(benchmark::State& state)
{
    const SystemParams p = reference_point();
    for (auto _ : state) {
        benchmark::DoNotOptimize(truncated_solve(p));
    }
}
BENCHMARK(BM_TruncatedSolve);

void BM_OptimalDrive(benchmark::State& state)
{
    const SystemParams p = reference_point();
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_drive(p));
    }
}
BENCHMARK(BM_OptimalDrive);

} // namespace

BENCHMARK_MAIN();

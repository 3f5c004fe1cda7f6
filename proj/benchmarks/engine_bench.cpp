#include <benchmark/benchmark.h>

#include "fishswarm/afsa.hpp"
#include "fishswarm/harness.hpp"
#include "fishswarm/pso.hpp"

using namespace fishswarm;

namespace {

void BM_AfsaIteration(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const Objective obj = lookup_objective("sphere", dim);
    const afsa::SwarmParams params{30,
                                   harness::default_visual0(obj),
                                   harness::default_step0(obj),
                                   10,
                                   0.5,
                                   1 << 20};
    const auto schedule = MwSchedule::constant(0.96, 1 << 20);
    EvalCounter counter;
    RngStream rng(1, 0);
    afsa::SwarmState swarm = afsa::init_swarm(obj, params, counter, rng);
    for (auto _ : state) {
        (void)afsa::step_iteration(swarm, obj, params, schedule, counter, rng);
    }
    state.SetItemsProcessed(state.iterations() * 30);
}

void BM_PsoRun(benchmark::State& state) {
    const Objective obj = lookup_objective("sphere", static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RngStream rng(1, 0);
        benchmark::DoNotOptimize(pso::run(obj, 50, rng));
    }
}

} // namespace

BENCHMARK(BM_AfsaIteration)->Arg(10)->Arg(30);
BENCHMARK(BM_PsoRun)->Arg(10)->Arg(30);

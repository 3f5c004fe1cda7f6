#include <benchmark/benchmark.h>

#include "fishswarm/objectives.hpp"
#include "fishswarm/random.hpp"

using namespace fishswarm;

namespace {

Point random_argument(const Objective& objective) {
    RngStream rng(7, 0);
    return random_point_in_bounds(objective.bounds, objective.dimension, rng);
}

void BM_Sphere(benchmark::State& state) {
    const Objective obj = lookup_objective("sphere", static_cast<int>(state.range(0)));
    const Point x = random_argument(obj);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sphere(x));
    }
}
BENCHMARK(BM_Sphere)->Arg(10)->Arg(30);

void BM_Rosenbrock(benchmark::State& state) {
    const Objective obj =
        lookup_objective("rosenbrock", static_cast<int>(state.range(0)));
    const Point x = random_argument(obj);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rosenbrock(x));
    }
}
BENCHMARK(BM_Rosenbrock)->Arg(10)->Arg(30);

void BM_Ackley(benchmark::State& state) {
    const Objective obj = lookup_objective("ackley", static_cast<int>(state.range(0)));
    const Point x = random_argument(obj);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ackley(x));
    }
}
BENCHMARK(BM_Ackley)->Arg(10)->Arg(30);

void BM_Griewank(benchmark::State& state) {
    const Objective obj =
        lookup_objective("griewank", static_cast<int>(state.range(0)));
    const Point x = random_argument(obj);
    for (auto _ : state) {
        benchmark::DoNotOptimize(griewank(x));
    }
}
BENCHMARK(BM_Griewank)->Arg(10)->Arg(30);

} // namespace

#include <random>

#include <benchmark/benchmark.h>

#include "evidec/oracle.hpp"
#include "evidec/sensitivity.hpp"
#include "../tests/testutil.hpp"

namespace {

using namespace evidec;

MassFunction random_mass(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return testutil::random_mass_function(rng);
}

void BM_evi(benchmark::State& state) {
    MassFunction m = random_mass(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evi(m));
    }
}
BENCHMARK(BM_evi);

void BM_induced_distribution(benchmark::State& state) {
    MassFunction m = random_mass(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(induced_distribution(m, Rho(0.5)));
    }
}
BENCHMARK(BM_induced_distribution);

void BM_enumerate_selections(benchmark::State& state) {
    MassFunction m = random_mass(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_selections(m));
    }
}
BENCHMARK(BM_enumerate_selections);

void BM_tree_evaluate(benchmark::State& state) {
    std::mt19937_64 rng(4);
    NodePtr tree = testutil::random_tree(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(tree, Rho(0.5)).root.scalar);
    }
}
BENCHMARK(BM_tree_evaluate);

void BM_strategy_regions(benchmark::State& state) {
    std::mt19937_64 rng(5);
    NodePtr tree = testutil::random_tree(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(strategy_regions(tree, 51));
    }
}
BENCHMARK(BM_strategy_regions);

void BM_simulate_nature(benchmark::State& state) {
    MassFunction m = random_mass(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            simulate_nature(m, Rho(0.5), static_cast<std::uint64_t>(state.range(0)), 7));
    }
}
BENCHMARK(BM_simulate_nature)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();

// SPDX-License-Identifier: MIT
//
// Scaling benchmarks for the hot paths: extremal expectations over growing
// families, criterion evaluation, the leverage grid search, chain evaluation
// and the sliding-window builder.
#include "levdec/chain.hpp"
#include "levdec/criteria.hpp"
#include "levdec/optimizer.hpp"
#include "levdec/regularity.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

namespace {

using namespace levdec;

/// Deterministic family with `members` rows over `states` grid points.
Regularity make_family(std::size_t states, std::size_t members) {
    std::vector<double> grid_states(states);
    for (std::size_t i = 0; i < states; ++i) {
        grid_states[i] = -0.1 + 0.3 * static_cast<double>(i) / static_cast<double>(states);
    }
    const ThetaGrid grid(grid_states);

    std::mt19937_64 engine(42);
    std::vector<Distribution> rows;
    rows.reserve(members);
    for (std::size_t m = 0; m < members; ++m) {
        std::vector<double> weights(states);
        double total = 0.0;
        for (double& w : weights) {
            w = -std::log1p(-static_cast<double>(engine() >> 11) * 0x1.0p-53);
            total += w;
        }
        for (double& w : weights) w /= total;
        rows.emplace_back(grid, weights);
    }
    return Regularity(grid, rows);
}

void bench_min_expectation(benchmark::State& state) {
    const auto family = make_family(static_cast<std::size_t>(state.range(0)),
                                    static_cast<std::size_t>(state.range(1)));
    const Decision d(10.0, 0.05);
    for (auto _ : state) {
        const auto result =
            min_expectation(family, [&](double t) { return consequence(t, d); });
        benchmark::DoNotOptimize(result.value);
    }
    state.SetComplexityN(state.range(0) * state.range(1));
}
BENCHMARK(bench_min_expectation)
    ->Args({16, 8})
    ->Args({64, 32})
    ->Args({256, 128})
    ->Complexity(benchmark::oN);

void bench_evaluate_averse(benchmark::State& state) {
    const auto family = make_family(64, static_cast<std::size_t>(state.range(0)));
    const Criterion criterion = UncertaintyAverse{family};
    const Decision d(10.0, 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(criterion, d));
    }
}
BENCHMARK(bench_evaluate_averse)->Arg(4)->Arg(32)->Arg(256);

void bench_evaluate_factored(benchmark::State& state) {
    const auto family = make_family(64, static_cast<std::size_t>(state.range(0)));
    const Decision d(10.0, 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_factored(family, d, Attitude::averse));
    }
}
BENCHMARK(bench_evaluate_factored)->Arg(4)->Arg(32)->Arg(256);

void bench_grid_optimize(benchmark::State& state) {
    const auto family = make_family(32, 16);
    const Criterion criterion = UncertaintyProne{family};
    const LeverageWindow window(0.0, 10.0, 0.05);
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_optimize(criterion, window, steps));
    }
}
BENCHMARK(bench_grid_optimize)->Arg(11)->Arg(101)->Arg(1001);

void bench_chain_criterion(benchmark::State& state) {
    const auto primitive = make_family(32, 16);
    std::vector<Decision> levels(static_cast<std::size_t>(state.range(0)),
                                 Decision(10.0, 0.001));
    const LeverageChain chain(levels, primitive);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chain_criterion(chain, Attitude::averse));
    }
}
BENCHMARK(bench_chain_criterion)->Arg(1)->Arg(4)->Arg(16);

void bench_empirical_regularity(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 engine(7);
    std::vector<double> samples(n);
    for (double& s : samples) {
        // Nine distinct levels keep the grid small while windows vary.
        s = 0.01 * static_cast<double>(engine() % 9);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(empirical_regularity(samples, n / 4, 1));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bench_empirical_regularity)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();

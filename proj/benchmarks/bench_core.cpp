#include <benchmark/benchmark.h>

#include <perfcast/optimize.hpp>
#include <perfcast/svg.hpp>
#include <perfcast/sweep.hpp>

#include <sstream>

using namespace perfcast;

namespace {

GameSpec quadratic_drift() {
    return {ScoringRule::quadratic(), PerformativityMap::drift(0.5), AuditCost(2.0, 1.0), 0.75};
}

GameSpec log_reversion() {
    return {ScoringRule::logarithmic(), PerformativityMap::reversion(), AuditCost(2.0, 1.0),
            0.3};
}

} // namespace

static void BM_RewardQuadraticDrift(benchmark::State& state) {
    const GameSpec game = quadratic_drift();
    double p_hat = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reward(game, p_hat));
        p_hat = p_hat < 0.9 ? p_hat + 1e-4 : 0.1;
    }
}
BENCHMARK(BM_RewardQuadraticDrift);

static void BM_RewardLogReversion(benchmark::State& state) {
    const GameSpec game = log_reversion();
    double p_hat = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reward(game, p_hat));
        p_hat = p_hat < 0.9 ? p_hat + 1e-4 : 0.1;
    }
}
BENCHMARK(BM_RewardLogReversion);

static void BM_RewardDerivative(benchmark::State& state) {
    const GameSpec game = log_reversion();
    for (auto _ : state) {
        benchmark::DoNotOptimize(reward_derivative(game, 0.4));
    }
}
BENCHMARK(BM_RewardDerivative);

static void BM_DriftDerivativeLemma(benchmark::State& state) {
    const GameSpec game = quadratic_drift();
    for (auto _ : state) {
        benchmark::DoNotOptimize(drift_derivative_lemma(game, 0.4));
    }
}
BENCHMARK(BM_DriftDerivativeLemma);

static void BM_GridArgmax(benchmark::State& state) {
    const GameSpec game = quadratic_drift();
    GridSpec grid;
    grid.points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_argmax(game, grid));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GridArgmax)->RangeMultiplier(4)->Range(125, 8000)->Complexity();

static void BM_RefineArgmax(benchmark::State& state) {
    const GameSpec game = quadratic_drift();
    for (auto _ : state) {
        benchmark::DoNotOptimize(refine_argmax(game, 0.87, 0.88));
    }
}
BENCHMARK(BM_RefineArgmax);

static void BM_CheckIncentiveCompatibility(benchmark::State& state) {
    const GameSpec game = quadratic_drift();
    const GridSpec grid;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_incentive_compatibility(game, grid, grid.spacing()));
    }
}
BENCHMARK(BM_CheckIncentiveCompatibility);

static void BM_RunSweep(benchmark::State& state) {
    SweepConfig config;
    config.rules = {ScoringRule::quadratic(), ScoringRule::spherical(),
                    ScoringRule::logarithmic()};
    config.map = PerformativityMap::drift(0.5);
    config.p_grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(config));
    }
}
BENCHMARK(BM_RunSweep)->Arg(9)->Arg(99);

static void BM_WriteCsv(benchmark::State& state) {
    SweepConfig config;
    config.rules = {ScoringRule::quadratic()};
    config.map = PerformativityMap::drift(0.5);
    const SweepResult result = run_sweep(config);
    for (auto _ : state) {
        std::ostringstream out;
        write_csv(result, out);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_WriteCsv);

static void BM_RenderSvg(benchmark::State& state) {
    SweepConfig config;
    config.rules = {ScoringRule::quadratic(), ScoringRule::spherical(),
                    ScoringRule::logarithmic()};
    config.map = PerformativityMap::drift(0.5);
    const SweepResult result = run_sweep(config);
    for (auto _ : state) {
        std::ostringstream out;
        render_svg({result}, out, ChartOptions{"bench", true});
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_RenderSvg);

BENCHMARK_MAIN();

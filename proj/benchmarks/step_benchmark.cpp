#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sparse_lms/experiment.hpp"
#include "sparse_lms/filter_core.hpp"

namespace {

using namespace sparse_lms;

void BM_Advance(benchmark::State& state) {
    const auto variant = static_cast<Variant>(state.range(0));
    const auto n_taps = static_cast<std::size_t>(state.range(1));
    AlgorithmConfig cfg = default_schedule().at(CellKey{variant, 1});
    std::mt19937_64 eng(7);
    std::normal_distribution<double> dist;
    std::vector<double> x(n_taps);
    for (double& v : x) v = dist(eng);
    FilterState s(n_taps);
    for (auto _ : state) {
        benchmark::DoNotOptimize(advance(s, x, 0.5, cfg));
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations());
    state.SetLabel(std::string(to_string(variant)));
}
BENCHMARK(BM_Advance)
    ->ArgsProduct({{0, 1, 2, 3}, {16, 64, 256}});

void BM_RunTrial(benchmark::State& state) {
    const auto variant = static_cast<Variant>(state.range(0));
    ExperimentConfig cfg;
    const TrialRealization trial = draw_realization(cfg, 4, 0);
    const AlgorithmConfig& algo = cfg.schedule.at(CellKey{variant, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_trial(trial.system, trial.input, trial.noise, algo, cfg.iterations));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cfg.iterations));
    state.SetLabel(std::string(to_string(variant)));
}
BENCHMARK(BM_RunTrial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_DrawRealization(benchmark::State& state) {
    ExperimentConfig cfg;
    std::size_t run = 0;
    for (auto _ : state) benchmark::DoNotOptimize(draw_realization(cfg, 4, run++));
}
BENCHMARK(BM_DrawRealization)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

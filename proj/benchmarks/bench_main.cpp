#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "emtedge/emt/decode.hpp"
#include "emtedge/emt/mfea.hpp"
#include "emtedge/model/generator.hpp"
#include "emtedge/selection/archive.hpp"
#include "emtedge/selection/selectors.hpp"

namespace {

using namespace emtedge;

auto simplex_rows(std::size_t rows, std::uint64_t seed) -> selection::ObjectiveMatrix {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    selection::ObjectiveMatrix m;
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<double> row(kObjectiveCount);
        double sum = 0.0;
        for (auto& v : row) {
            v = u(rng);
            sum += v;
        }
        for (auto& v : row) {
            v /= sum;
        }
        m.append(row);
    }
    return m;
}

void BM_ArchiveSurvivors(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    auto const m = simplex_rows(2 * n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(selection::archive_survivors(m, n));
    }
}
BENCHMARK(BM_ArchiveSurvivors)->Arg(50)->Arg(100)->Arg(200);

void BM_SelectGrid(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    auto const m = simplex_rows(2 * n, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(selection::select_grid(m, n));
    }
}
BENCHMARK(BM_SelectGrid)->Arg(50)->Arg(100);

void BM_SelectVectorAngle(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    auto const m = simplex_rows(2 * n, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(selection::select_vector_angle(m, n));
    }
}
BENCHMARK(BM_SelectVectorAngle)->Arg(50)->Arg(100);

void BM_Evaluate(benchmark::State& state) {
    auto const inst = model::generate_instance(model::GenConfig{}, 1);
    auto const task = task_from_index(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Individual ind;
    ind.skill_factor = task;
    ind.genome.resize(emt::unified_dimension(inst));
    for (auto& g : ind.genome) {
        g = u(rng);
    }
    for (auto _ : state) {
        emt::evaluate(ind, inst);
        benchmark::DoNotOptimize(ind.objectives);
    }
}
BENCHMARK(BM_Evaluate)->Arg(0)->Arg(1);

void BM_Generation(benchmark::State& state) {
    auto const inst = model::generate_instance(model::GenConfig{}, 1);
    emt::MfeaConfig config;
    config.population_size = static_cast<std::size_t>(state.range(0));
    config.generations = 10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(emt::run_momfea_ms(config, inst));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.generations));
}
BENCHMARK(BM_Generation)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

#ifndef EMTEDGE_EMT_MFEA_HPP
#define EMTEDGE_EMT_MFEA_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "emtedge/emt/config.hpp"
#include "emtedge/individual.hpp"
#include "emtedge/model/instance.hpp"
#include "emtedge/selection/environment.hpp"

namespace emtedge::emt {

// Best / worst / mean of each objective over a set, internal orientation
// (best is the minimum).
struct ObjectiveStats {
    ObjectiveVector best{};
    ObjectiveVector worst{};
    ObjectiveVector mean{};

    friend auto operator==(ObjectiveStats const&, ObjectiveStats const&) -> bool = default;
};

[[nodiscard]] auto summarize(std::span<Individual const> members) -> std::optional<ObjectiveStats>;

struct GenerationRecord {
    std::size_t generation{};
    std::array<std::optional<ObjectiveStats>, kTaskCount> archive{};
    std::size_t cross_task_crossovers{};

    friend auto operator==(GenerationRecord const&, GenerationRecord const&) -> bool = default;
};

struct RunReport {
    MfeaConfig config;
    RunMode mode = RunMode::multitask;
    std::vector<GenerationRecord> history; // one per generation, 1..G
    std::array<std::vector<Individual>, kTaskCount> archives;
    std::vector<Individual> population;
    double wall_seconds = 0.0;
};

// Snapshot handed to an observer after each generation.
struct GenerationView {
    std::size_t generation;
    std::span<Individual const> population;
    selection::Archives const& archives;
    std::size_t cross_task_crossovers;
};

using GenerationObserver = std::function<void(GenerationView const&)>;

// Within each task, non-dominated sorting then SDE within the front orders
// the members holding that task; factorial rank is the 1-based position and
// scalar fitness its reciprocal. Ranks for the other task are cleared.
void assign_factorial_ranks(std::span<Individual> population);

// Uniform random genomes of the unified length; skill factors alternate over
// the mode's tasks; each member is evaluated on its own task and ranked.
[[nodiscard]] auto initialize_population(MfeaConfig const& config, model::EdgeInstance const& instance,
                                         RunMode mode = RunMode::multitask) -> std::vector<Individual>;

// Index of the binary-tournament winner on scalar fitness; ties are random.
[[nodiscard]] auto tournament_pick(std::span<Individual const> population, std::mt19937_64& rng) -> std::size_t;

[[nodiscard]] auto run_momfea_ms(MfeaConfig const& config, model::EdgeInstance const& instance,
                                 RunMode mode = RunMode::multitask, GenerationObserver const& observer = {})
    -> RunReport;

} // namespace emtedge::emt

#endif // EMTEDGE_EMT_MFEA_HPP

#include "emtedge/emt/config.hpp"

#include <string>

#include "emtedge/errors.hpp"

namespace emtedge::emt {

auto to_string(RunMode mode) -> std::string_view {
    switch (mode) {
    case RunMode::multitask:
        return "multitask";
    case RunMode::singletask_deployment:
        return "singletask-T1";
    case RunMode::singletask_offload:
        return "singletask-T2";
    }
    return "multitask";
}

auto parse_run_mode(std::string_view text) -> RunMode {
    for (auto mode : {RunMode::multitask, RunMode::singletask_deployment, RunMode::singletask_offload}) {
        if (text == to_string(mode)) {
            return mode;
        }
    }
    throw ConfigError("unknown mode '" + std::string(text) + "' (expected multitask, singletask-T1 or singletask-T2)");
}

auto active_tasks(RunMode mode) -> std::vector<Task> {
    switch (mode) {
    case RunMode::singletask_deployment:
        return {Task::deployment};
    case RunMode::singletask_offload:
        return {Task::offload};
    case RunMode::multitask:
        break;
    }
    return {Task::deployment, Task::offload};
}

void validate(MfeaConfig const& c) {
    if (c.population_size < 4 || c.population_size % 2 != 0) {
        throw ConfigError("population size must be even and at least 4 (got " + std::to_string(c.population_size) +
                          ")");
    }
    if (c.generations < 1) {
        throw ConfigError("generations must be at least 1");
    }
    if (!(c.rmp >= 0.0 && c.rmp <= 1.0)) {
        throw ConfigError("rmp must lie in [0, 1] (got " + std::to_string(c.rmp) + ")");
    }
    if (!(c.crossover_index >= 0.0) || !(c.mutation_index >= 0.0)) {
        throw ConfigError("distribution indices must be non-negative");
    }
    if (c.mutation_probability && !(*c.mutation_probability >= 0.0 && *c.mutation_probability <= 1.0)) {
        throw ConfigError("mutation probability must lie in [0, 1]");
    }
    if (c.grid_divisions < 1) {
        throw ConfigError("grid divisions must be at least 1");
    }
}

} // namespace emtedge::emt

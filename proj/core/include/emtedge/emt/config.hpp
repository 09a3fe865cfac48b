#ifndef EMTEDGE_EMT_CONFIG_HPP
#define EMTEDGE_EMT_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "emtedge/objectives.hpp"
#include "emtedge/selection/selectors.hpp"

namespace emtedge::emt {

enum class RunMode { multitask, singletask_deployment, singletask_offload };

[[nodiscard]] auto to_string(RunMode mode) -> std::string_view;
// Accepts "multitask", "singletask-T1", "singletask-T2". Throws ConfigError.
[[nodiscard]] auto parse_run_mode(std::string_view text) -> RunMode;

[[nodiscard]] auto active_tasks(RunMode mode) -> std::vector<Task>;

struct MfeaConfig {
    std::size_t population_size = 100;
    double rmp = 0.3;
    std::size_t generations = 600;
    double crossover_index = 20.0;
    double mutation_index = 20.0;
    std::optional<double> mutation_probability; // default 1 / genome length
    std::uint64_t seed = 1;
    std::size_t grid_divisions = selection::kDefaultGridDivisions;
    unsigned workers = 1; // evaluation threads; results do not depend on it

    friend auto operator==(MfeaConfig const&, MfeaConfig const&) -> bool = default;
};

// Throws ConfigError unless N is even and >= 4, G >= 1, rmp in [0, 1].
void validate(MfeaConfig const& config);

} // namespace emtedge::emt

#endif // EMTEDGE_EMT_CONFIG_HPP

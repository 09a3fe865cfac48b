#ifndef EMTEDGE_INDIVIDUAL_HPP
#define EMTEDGE_INDIVIDUAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "emtedge/objectives.hpp"

namespace emtedge {

// Bit set of tasks whose genetic material an individual carries.
using Lineage = std::uint8_t;

[[nodiscard]] constexpr auto lineage_of(Task t) noexcept -> Lineage {
    return static_cast<Lineage>(1U << task_index(t));
}

// One member of the unified population. Genome entries lie in [0, 1];
// `objectives` holds values for `skill_factor` only.
struct Individual {
    std::vector<double> genome;
    Task skill_factor = Task::deployment;
    std::array<std::optional<std::size_t>, kTaskCount> factorial_rank{};
    double scalar_fitness = 0.0;
    ObjectiveVector objectives{};
    bool feasible = true;
    Lineage lineage = 0;

    friend auto operator==(Individual const&, Individual const&) -> bool = default;
};

} // namespace emtedge

#endif // EMTEDGE_INDIVIDUAL_HPP

#ifndef EMTEDGE_SELECTION_ENVIRONMENT_HPP
#define EMTEDGE_SELECTION_ENVIRONMENT_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "emtedge/individual.hpp"
#include "emtedge/selection/archive.hpp"
#include "emtedge/selection/selectors.hpp"

namespace emtedge::selection {

using Archives = std::array<Archive, kTaskCount>;

// Produces a freshly evaluated random individual for a task that has no
// members left in the merged population.
using FreshIndividual = std::function<Individual(Task)>;

struct EnvironmentSettings {
    std::size_t grid_divisions = kDefaultGridDivisions;
};

// Rows of `candidates` ordered by (front, SDE descending, row). SDE is taken
// within each front after normalizing over the whole candidate set.
[[nodiscard]] auto front_sde_order(ObjectiveMatrix const& candidates) -> std::vector<std::size_t>;

// Next population of `size` from merged parents and offspring. For every
// active task the quota size / |tasks| is filled as follows: the task's
// members feed the vector-angle, tournament and grid selectors (one quota
// each); feasible picks update that task's archive; the quota is then taken
// by front_sde_order() from the distinct picks plus the updated archive.
[[nodiscard]] auto environment_selection(std::span<Individual const> merged, std::size_t size,
                                         std::span<Task const> tasks, Archives& archives, std::mt19937_64& rng,
                                         FreshIndividual const& fresh, EnvironmentSettings const& settings = {})
    -> std::vector<Individual>;

} // namespace emtedge::selection

#endif // EMTEDGE_SELECTION_ENVIRONMENT_HPP

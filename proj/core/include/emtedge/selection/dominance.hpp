#ifndef EMTEDGE_SELECTION_DOMINANCE_HPP
#define EMTEDGE_SELECTION_DOMINANCE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "emtedge/selection/objective_matrix.hpp"

namespace emtedge::selection {

// Pareto dominance under minimization. Throws ContractViolation on a length
// mismatch.
[[nodiscard]] auto dominates(std::span<double const> a, std::span<double const> b) -> bool;

// Fronts of a non-dominated sort; fronts[0] is the Pareto set. Members of
// each front are in ascending row order.
[[nodiscard]] auto nondominated_fronts(ObjectiveMatrix const& points) -> std::vector<std::vector<std::size_t>>;

// front_of[i] = index of the front holding row i.
[[nodiscard]] auto front_indices(ObjectiveMatrix const& points) -> std::vector<std::size_t>;

[[nodiscard]] auto mutually_nondominated(ObjectiveMatrix const& points) -> bool;

} // namespace emtedge::selection

#endif // EMTEDGE_SELECTION_DOMINANCE_HPP

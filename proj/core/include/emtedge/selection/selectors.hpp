#ifndef EMTEDGE_SELECTION_SELECTORS_HPP
#define EMTEDGE_SELECTION_SELECTORS_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "emtedge/selection/objective_matrix.hpp"

namespace emtedge::selection {

inline constexpr std::size_t kDefaultGridDivisions = 8;

// Angular-spread selection in normalized objective space. The per-objective
// extremes are taken first (ties to the lower row), then the row whose
// smallest angle to the chosen set is largest, until `count` rows are
// chosen. Returns distinct row indices in pick order.
[[nodiscard]] auto select_vector_angle(ObjectiveMatrix const& pool, std::size_t count) -> std::vector<std::size_t>;

// `count` binary tournaments with replacement: lower front wins, then the
// larger SDE value, then a coin flip. Returns the winners in draw order.
[[nodiscard]] auto select_tournament(ObjectiveMatrix const& pool, std::size_t count, std::mt19937_64& rng)
    -> std::vector<std::size_t>;

// Hyperbox grid over a solution set. Coordinates lie in [0, divisions-1].
struct Grid {
    std::size_t divisions{};
    std::vector<double> lower;
    std::vector<double> width;
    std::vector<std::vector<int>> coords;

    std::vector<double> rank;           // GR: sum of coordinates
    std::vector<double> crowding;       // GCD over the whole set
    std::vector<double> point_distance; // GCPD: offset from the cell's lower corner, in cell widths

    [[nodiscard]] auto grid_difference(std::size_t a, std::size_t b) const -> int;
    [[nodiscard]] auto grid_dominates(std::size_t a, std::size_t b) const -> bool;
};

[[nodiscard]] auto build_grid(ObjectiveMatrix const& points, std::size_t divisions) -> Grid;

// Grid-based selection. Whole non-dominated fronts are taken while they fit;
// the front that overflows is filled one pick at a time by the smallest
// (GR, GCD, GCPD), where GCD counts crowding against already picked members,
// and each pick penalizes the GR of its grid twins, the members it
// grid-dominates and its grid neighbours. Ties go to the lower row. Returns
// distinct row indices in pick order.
[[nodiscard]] auto select_grid(ObjectiveMatrix const& pool, std::size_t count,
                               std::size_t divisions = kDefaultGridDivisions) -> std::vector<std::size_t>;

} // namespace emtedge::selection

#endif // EMTEDGE_SELECTION_SELECTORS_HPP

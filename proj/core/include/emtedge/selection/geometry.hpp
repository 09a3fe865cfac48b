#ifndef EMTEDGE_SELECTION_GEOMETRY_HPP
#define EMTEDGE_SELECTION_GEOMETRY_HPP

#include <span>
#include <vector>

#include "emtedge/selection/objective_matrix.hpp"

namespace emtedge::selection {

// Objectives rescaled to [0, 1] by the per-column range of the input set.
// A column with max == min maps to 0.
struct NormalizedFront {
    ObjectiveMatrix values;
    std::vector<double> mins;
    std::vector<double> maxs;
};

[[nodiscard]] auto normalize(ObjectiveMatrix const& raw) -> NormalizedFront;

// Euclidean norm of a (normalized) objective row.
[[nodiscard]] auto norm(std::span<double const> x) -> double;

// arccos(|<x, y>| / (|x| |y|)), with the cosine clamped into [0, 1]. A
// zero-norm argument yields pi/2.
[[nodiscard]] auto vector_angle(std::span<double const> x, std::span<double const> y) -> double;

// Shift-based density estimate: for row i, the distance to the nearest
// other row after shifting that row to max(f(j), f(i)) per objective.
// Larger means less crowded; a lone row gets +infinity.
[[nodiscard]] auto sde_fitness(ObjectiveMatrix const& front) -> std::vector<double>;

// Shifted distance from i to j as used by sde_fitness().
[[nodiscard]] auto shifted_distance(std::span<double const> focal, std::span<double const> other) -> double;

} // namespace emtedge::selection

#endif // EMTEDGE_SELECTION_GEOMETRY_HPP

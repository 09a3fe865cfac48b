#ifndef EMTEDGE_TESTS_ORACLES_HPP
#define EMTEDGE_TESTS_ORACLES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "emtedge/model/instance.hpp"
#include "emtedge/model/offload.hpp"
#include "emtedge/objectives.hpp"
#include "emtedge/selection/objective_matrix.hpp"

// Independent reference implementations, written directly from the model
// and selection definitions without reusing library code paths.
namespace emtedge::oracle {

// x[u][i] = 1 iff user u sits on cloud i.
auto deployment_objectives(model::EdgeInstance const& inst, std::vector<std::vector<int>> const& x) -> ObjectiveVector;
auto one_hot(std::vector<std::size_t> const& assignment, std::size_t clouds) -> std::vector<std::vector<int>>;

// s[k][n] = 1 iff subtask n of terminal k runs locally.
auto greedy_servers(model::EdgeInstance const& inst, std::vector<std::vector<int>> const& s)
    -> std::vector<std::vector<std::optional<std::size_t>>>;
auto offload_objectives(model::EdgeInstance const& inst, std::vector<std::vector<int>> const& s,
                        std::vector<std::vector<std::optional<std::size_t>>> const& server) -> ObjectiveVector;
auto local_flags(std::vector<std::vector<model::Placement>> const& place) -> std::vector<std::vector<int>>;

// Front number (0-based) of every row by repeated peeling.
auto front_numbers(selection::ObjectiveMatrix const& m) -> std::vector<std::size_t>;

// Minimum shifted distance to any other row; +inf for a single row.
auto sde(selection::ObjectiveMatrix const& m) -> std::vector<double>;

// Min-max scaling per column, 0 for a constant column.
auto minmax(selection::ObjectiveMatrix const& m) -> selection::ObjectiveMatrix;

// Survivor rows of an archive update: drop dominated rows, drop exact
// repeats, then remove the lowest-SDE row recomputing from scratch until
// `capacity` remain; per-objective minima are never removed unless there are
// more of them than `capacity`.
auto archive(selection::ObjectiveMatrix const& m, std::size_t capacity) -> std::vector<std::size_t>;

// Rows ordered by (front, SDE descending within the front, row).
auto front_sde_order(selection::ObjectiveMatrix const& m) -> std::vector<std::size_t>;

} // namespace emtedge::oracle

#endif // EMTEDGE_TESTS_ORACLES_HPP

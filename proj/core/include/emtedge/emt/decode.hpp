#ifndef EMTEDGE_EMT_DECODE_HPP
#define EMTEDGE_EMT_DECODE_HPP

#include <cstddef>
#include <span>

#include "emtedge/individual.hpp"
#include "emtedge/model/deployment.hpp"
#include "emtedge/model/instance.hpp"
#include "emtedge/model/offload.hpp"

namespace emtedge::emt {

// Length of the unified genome: max(|users|, total subtasks).
[[nodiscard]] auto unified_dimension(model::EdgeInstance const& instance) -> std::size_t;

// Gene u picks cloud floor(g * N) (clamped to N - 1) for user u. The plan is
// returned before repair.
[[nodiscard]] auto decode_assignment(std::span<double const> genome, model::EdgeInstance const& instance)
    -> model::DeploymentPlan;

// decode_assignment() followed by repair_deployment(); may throw
// InfeasibleInstanceError.
[[nodiscard]] auto decode_deployment(std::span<double const> genome, model::EdgeInstance const& instance)
    -> model::DeploymentPlan;

// Subtasks in row-major (terminal, subtask) order read one gene each:
// below 0.5 runs locally, otherwise on the edge. Servers follow the
// earliest-available rule.
[[nodiscard]] auto decode_offload(std::span<double const> genome, model::EdgeInstance const& instance)
    -> model::OffloadPlan;

// Decodes and evaluates `ind` on its skill-factor task, setting objectives
// and feasibility. A deployment that cannot be repaired is marked
// infeasible; its objectives are filled in later by apply_infeasible_sentinel().
void evaluate(Individual& ind, model::EdgeInstance const& instance);

// Overwrites the objectives of infeasible members holding `task` with a
// vector worse than every feasible member: entry k becomes 10 * worst_k,
// or 1 + 9 |worst_k| when worst_k <= 0 (the negated reliability column).
void apply_infeasible_sentinel(std::span<Individual> population, Task task);

} // namespace emtedge::emt

#endif // EMTEDGE_EMT_DECODE_HPP

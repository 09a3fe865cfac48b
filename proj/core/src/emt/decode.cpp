#include "emtedge/emt/decode.hpp"

#include <algorithm>
#include <cmath>

#include "emtedge/errors.hpp"

namespace emtedge::emt {

auto unified_dimension(model::EdgeInstance const& instance) -> std::size_t {
    return std::max(instance.users.size(), instance.total_subtasks());
}

auto decode_assignment(std::span<double const> genome, model::EdgeInstance const& instance) -> model::DeploymentPlan {
    auto const users = instance.users.size();
    auto const clouds = instance.edge_clouds.size();
    if (genome.size() < users) {
        throw ContractViolation("genome shorter than the number of users");
    }
    model::DeploymentPlan plan;
    plan.assignment.resize(users);
    for (std::size_t u = 0; u < users; ++u) {
        auto const cell = std::floor(genome[u] * static_cast<double>(clouds));
        plan.assignment[u] = std::min(static_cast<std::size_t>(std::max(cell, 0.0)), clouds - 1);
    }
    return plan;
}

auto decode_deployment(std::span<double const> genome, model::EdgeInstance const& instance) -> model::DeploymentPlan {
    return model::repair_deployment(instance, decode_assignment(genome, instance));
}

auto decode_offload(std::span<double const> genome, model::EdgeInstance const& instance) -> model::OffloadPlan {
    if (genome.size() < instance.total_subtasks()) {
        throw ContractViolation("genome shorter than the number of subtasks");
    }
    std::vector<std::vector<model::Placement>> place;
    place.reserve(instance.terminals.size());
    std::size_t gene = 0;
    for (auto const& terminal : instance.terminals) {
        auto& row = place.emplace_back();
        row.reserve(terminal.subtasks.size());
        for (std::size_t n = 0; n < terminal.subtasks.size(); ++n) {
            row.push_back(genome[gene++] < 0.5 ? model::Placement::local : model::Placement::edge);
        }
    }
    return model::make_offload_plan(instance, std::move(place));
}

void evaluate(Individual& ind, model::EdgeInstance const& instance) {
    if (ind.skill_factor == Task::offload) {
        ind.objectives = model::eval_offload(instance, decode_offload(ind.genome, instance));
        ind.feasible = true;
        return;
    }
    try {
        ind.objectives = model::eval_deployment(instance, decode_deployment(ind.genome, instance));
        ind.feasible = true;
    } catch (InfeasibleInstanceError const&) {
        ind.objectives.fill(0.0);
        ind.feasible = false;
    }
}

void apply_infeasible_sentinel(std::span<Individual> population, Task task) {
    bool any_feasible = false;
    ObjectiveVector worst{};
    for (auto const& ind : population) {
        if (ind.skill_factor != task || !ind.feasible) {
            continue;
        }
        for (std::size_t k = 0; k < kObjectiveCount; ++k) {
            worst[k] = any_feasible ? std::max(worst[k], ind.objectives[k]) : ind.objectives[k];
        }
        any_feasible = true;
    }
    ObjectiveVector sentinel{};
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
        double const w = any_feasible ? worst[k] : 0.0;
        sentinel[k] = w > 0.0 ? 10.0 * w : 1.0 + 9.0 * std::abs(w);
    }
    for (auto& ind : population) {
        if (ind.skill_factor == task && !ind.feasible) {
            ind.objectives = sentinel;
        }
    }
}

} // namespace emtedge::emt

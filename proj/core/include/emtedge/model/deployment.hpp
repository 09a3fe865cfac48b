#ifndef EMTEDGE_MODEL_DEPLOYMENT_HPP
#define EMTEDGE_MODEL_DEPLOYMENT_HPP

#include <cstddef>
#include <vector>

#include "emtedge/model/instance.hpp"
#include "emtedge/objectives.hpp"

namespace emtedge::model {

// assignment[u] is the edge cloud serving user u (exactly one per user).
struct DeploymentPlan {
    std::vector<std::size_t> assignment;

    friend auto operator==(DeploymentPlan const&, DeploymentPlan const&) -> bool = default;
};

struct DeploymentCheck {
    bool feasible{};
    std::vector<double> load; // per cloud, sum of assigned service requirements
};

// Capacity check. Throws MalformedPlanError on size or index mismatch.
[[nodiscard]] auto check_deployment(EdgeInstance const& instance, DeploymentPlan const& plan) -> DeploymentCheck;

// Greedy capacity repair. Overloaded clouds are visited in ascending index;
// while a cloud is over capacity its highest-index user moves to the cloud
// with the most remaining capacity that can take it (ties: lowest index).
// Throws InfeasibleInstanceError if some excess user fits nowhere.
[[nodiscard]] auto repair_deployment(EdgeInstance const& instance, DeploymentPlan plan) -> DeploymentPlan;

struct DeploymentBreakdown {
    double comm_latency{};
    double compute_latency{};
    double transmit_latency{};
    double total_latency{};
    double energy{};
    double cost{};
    double reliability{}; // positive, as reported
};

// Throws ContractViolation if the plan is infeasible.
[[nodiscard]] auto deployment_breakdown(EdgeInstance const& instance, DeploymentPlan const& plan)
    -> DeploymentBreakdown;

// (T_total, E_t, Cost_dep, -Re)
[[nodiscard]] auto eval_deployment(EdgeInstance const& instance, DeploymentPlan const& plan) -> ObjectiveVector;

// Share of base-station/cloud pairs within coverage, divided by S^2.
// Independent of the plan; every cloud contributes.
[[nodiscard]] auto network_reliability(EdgeInstance const& instance) -> double;

// Wire length from a cloud to its nearest base station (0 when S = 0).
[[nodiscard]] auto nearest_station_distance(EdgeInstance const& instance, std::size_t cloud) -> double;

} // namespace emtedge::model

#endif // EMTEDGE_MODEL_DEPLOYMENT_HPP

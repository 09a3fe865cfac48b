#include "emtedge/model/deployment.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "emtedge/errors.hpp"

namespace emtedge::model {

auto check_deployment(EdgeInstance const& instance, DeploymentPlan const& plan) -> DeploymentCheck {
    auto const clouds = instance.edge_clouds.size();
    if (plan.assignment.size() != instance.users.size()) {
        throw MalformedPlanError("deployment plan has " + std::to_string(plan.assignment.size()) +
                                 " assignments for " + std::to_string(instance.users.size()) + " users");
    }
    DeploymentCheck result{true, std::vector<double>(clouds, 0.0)};
    for (std::size_t u = 0; u < plan.assignment.size(); ++u) {
        auto const i = plan.assignment[u];
        if (i >= clouds) {
            throw MalformedPlanError("user " + std::to_string(u) + " assigned to cloud " + std::to_string(i) +
                                     ", but only " + std::to_string(clouds) + " clouds exist");
        }
        result.load[i] += instance.users[u].service_requirement;
    }
    for (std::size_t i = 0; i < clouds; ++i) {
        if (result.load[i] > instance.edge_clouds[i].capacity) {
            result.feasible = false;
        }
    }
    return result;
}

auto repair_deployment(EdgeInstance const& instance, DeploymentPlan plan) -> DeploymentPlan {
    auto load = check_deployment(instance, plan).load;
    auto const& clouds = instance.edge_clouds;
    auto& assignment = plan.assignment;

    for (std::size_t i = 0; i < clouds.size(); ++i) {
        while (load[i] > clouds[i].capacity) {
            std::size_t user = assignment.size();
            for (std::size_t u = assignment.size(); u-- > 0;) {
                if (assignment[u] == i) {
                    user = u;
                    break;
                }
            }
            if (user == assignment.size()) {
                throw InfeasibleInstanceError("cloud " + std::to_string(i) + " is over capacity with no users");
            }
            double const demand = instance.users[user].service_requirement;

            std::size_t target = clouds.size();
            double best_room = -std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < clouds.size(); ++c) {
                if (c == i) {
                    continue;
                }
                double const room = clouds[c].capacity - load[c];
                if (room >= demand && room > best_room) {
                    best_room = room;
                    target = c;
                }
            }
            if (target == clouds.size()) {
                throw InfeasibleInstanceError("no edge cloud can absorb user " + std::to_string(user) +
                                              " (requirement " + std::to_string(demand) + ") moved off cloud " +
                                              std::to_string(i));
            }
            assignment[user] = target;
            load[i] -= demand;
            load[target] += demand;
        }
    }
    return plan;
}

auto nearest_station_distance(EdgeInstance const& instance, std::size_t cloud) -> double {
    if (instance.base_stations.empty()) {
        return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    for (auto const& station : instance.base_stations) {
        best = std::min(best, distance(instance.edge_clouds[cloud].position, station));
    }
    return best;
}

auto network_reliability(EdgeInstance const& instance) -> double {
    auto const stations = instance.base_stations.size();
    if (stations == 0) {
        return 0.0;
    }
    std::size_t covered = 0;
    for (auto const& station : instance.base_stations) {
        for (auto const& cloud : instance.edge_clouds) {
            if (distance(cloud.position, station) <= cloud.coverage_radius) {
                ++covered;
            }
        }
    }
    auto const s = static_cast<double>(stations);
    return static_cast<double>(covered) / (s * s);
}

auto deployment_breakdown(EdgeInstance const& instance, DeploymentPlan const& plan) -> DeploymentBreakdown {
    auto const check = check_deployment(instance, plan);
    if (!check.feasible) {
        throw ContractViolation("eval_deployment requires a feasible plan; run repair_deployment first");
    }

    DeploymentBreakdown out;
    std::vector<bool> used(instance.edge_clouds.size(), false);
    for (std::size_t u = 0; u < instance.users.size(); ++u) {
        auto const& user = instance.users[u];
        auto const i = plan.assignment[u];
        auto const& cloud = instance.edge_clouds[i];
        out.comm_latency += user.comm_latency[i];
        out.compute_latency += user.compute_demand / cloud.cpu;
        out.transmit_latency += user.compute_demand / user.transmit_rate;
        out.energy += cloud.energy_per_service;
        used[i] = true;
    }
    out.total_latency = out.comm_latency + out.compute_latency + out.transmit_latency;

    for (std::size_t i = 0; i < used.size(); ++i) {
        if (used[i]) {
            auto const& cloud = instance.edge_clouds[i];
            out.cost += cloud.fixed_cost + cloud.line_cost * nearest_station_distance(instance, i);
        }
    }
    out.reliability = network_reliability(instance);
    return out;
}

auto eval_deployment(EdgeInstance const& instance, DeploymentPlan const& plan) -> ObjectiveVector {
    auto const b = deployment_breakdown(instance, plan);
    return {b.total_latency, b.energy, b.cost, -b.reliability};
}

} // namespace emtedge::model

#include "emtedge/model/offload.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "emtedge/errors.hpp"

namespace emtedge::model {

namespace {

void check_shape(EdgeInstance const& instance, OffloadPlan const& plan, bool need_servers) {
    auto const terminals = instance.terminals.size();
    if (plan.place.size() != terminals || plan.server.size() != terminals) {
        throw MalformedPlanError("offload plan covers " + std::to_string(plan.place.size()) + " terminals, instance has " +
                                 std::to_string(terminals));
    }
    auto const servers = instance.edge_clouds.size();
    for (std::size_t k = 0; k < terminals; ++k) {
        auto const subtasks = instance.terminals[k].subtasks.size();
        if (plan.place[k].size() != subtasks || plan.server[k].size() != subtasks) {
            throw MalformedPlanError("offload plan row " + std::to_string(k) + " does not match the terminal's " +
                                     std::to_string(subtasks) + " subtasks");
        }
        if (!need_servers) {
            continue;
        }
        for (std::size_t n = 0; n < subtasks; ++n) {
            auto const& srv = plan.server[k][n];
            if (plan.place[k][n] == Placement::edge) {
                if (!srv || *srv >= servers) {
                    throw MalformedPlanError("offloaded subtask (" + std::to_string(k) + ", " + std::to_string(n) +
                                             ") has no valid server");
                }
            } else if (srv) {
                throw MalformedPlanError("local subtask (" + std::to_string(k) + ", " + std::to_string(n) +
                                         ") must not name a server");
            }
        }
    }
}

} // namespace

void assign_servers(EdgeInstance const& instance, OffloadPlan& plan) {
    check_shape(instance, plan, false);
    auto const& clouds = instance.edge_clouds;
    std::vector<double> available(clouds.size(), 0.0);
    for (std::size_t k = 0; k < plan.place.size(); ++k) {
        double previous_finish = 0.0;
        for (std::size_t n = 0; n < plan.place[k].size(); ++n) {
            if (plan.place[k][n] != Placement::edge) {
                plan.server[k][n].reset();
                continue;
            }
            if (clouds.empty()) {
                throw MalformedPlanError("subtask offloaded but the instance has no edge servers");
            }
            auto const s = static_cast<std::size_t>(std::distance(
                available.begin(), std::min_element(available.begin(), available.end())));
            double const start = std::max(available[s], previous_finish);
            double const finish = start + instance.terminals[k].subtasks[n].edge_cycles / clouds[s].cpu;
            available[s] = finish;
            previous_finish = finish;
            plan.server[k][n] = s;
        }
    }
}

auto make_offload_plan(EdgeInstance const& instance, std::vector<std::vector<Placement>> place) -> OffloadPlan {
    OffloadPlan plan;
    plan.server.reserve(place.size());
    for (auto const& row : place) {
        plan.server.emplace_back(row.size());
    }
    plan.place = std::move(place);
    assign_servers(instance, plan);
    return plan;
}

auto schedule_offload(EdgeInstance const& instance, OffloadPlan const& plan) -> ScheduleTimeline {
    check_shape(instance, plan, true);
    auto const& clouds = instance.edge_clouds;
    ScheduleTimeline timeline;
    timeline.terminal_edge_span.assign(instance.terminals.size(), 0.0);
    timeline.server_busy.assign(clouds.size(), 0.0);
    std::vector<double> available(clouds.size(), 0.0);

    for (std::size_t k = 0; k < instance.terminals.size(); ++k) {
        auto const& terminal = instance.terminals[k];
        double previous_finish = 0.0;
        double first_start = 0.0;
        bool any = false;
        for (std::size_t n = 0; n < terminal.subtasks.size(); ++n) {
            if (plan.place[k][n] != Placement::edge) {
                continue;
            }
            auto const s = *plan.server[k][n];
            ScheduledSubtask e;
            e.terminal = k;
            e.subtask = n;
            e.server = s;
            e.service = terminal.subtasks[n].edge_cycles / clouds[s].cpu;
            e.start = std::max(available[s], previous_finish);
            e.finish = e.start + e.service;
            available[s] = e.finish;
            timeline.server_busy[s] += e.service;
            previous_finish = e.finish;
            if (!any) {
                first_start = e.start;
                any = true;
            }
            timeline.entries.push_back(e);
        }
        timeline.terminal_edge_span[k] = any ? previous_finish - first_start : 0.0;
    }
    return timeline;
}

auto offload_breakdown(EdgeInstance const& instance, OffloadPlan const& plan) -> OffloadBreakdown {
    auto const timeline = schedule_offload(instance, plan);
    auto const terminals = instance.terminals.size();
    OffloadBreakdown out;

    std::vector<double> local_busy(terminals, 0.0);
    std::size_t slowest = 0;
    for (std::size_t k = 0; k < terminals; ++k) {
        auto const& terminal = instance.terminals[k];
        for (std::size_t n = 0; n < terminal.subtasks.size(); ++n) {
            if (plan.place[k][n] == Placement::local) {
                local_busy[k] += terminal.subtasks[n].local_cycles / terminal.local_speed;
            }
        }
        if (local_busy[k] > local_busy[slowest]) {
            slowest = k;
        }
    }
    out.local_latency = terminals == 0 ? 0.0 : local_busy[slowest];
    for (double span : timeline.terminal_edge_span) {
        out.edge_latency = std::max(out.edge_latency, span);
    }
    out.total_latency = out.local_latency + out.edge_latency;

    // The terminal that sets T_local supplies P_local.
    double const local_power = terminals == 0 ? 0.0 : instance.terminals[slowest].local_power;
    out.local_energy = out.local_latency * local_power;
    out.edge_energy = out.edge_latency * instance.constants.edge_power;
    out.energy = out.local_energy + out.edge_energy;

    for (std::size_t k = 0; k < terminals; ++k) {
        double price = 0.0;
        for (std::size_t n = 0; n < plan.place[k].size(); ++n) {
            if (plan.place[k][n] == Placement::edge) {
                price = instance.edge_clouds[*plan.server[k][n]].price_per_second;
                break;
            }
        }
        out.cost += out.total_latency * price + instance.terminals[k].transport_cost;
    }

    auto utilization = [&](double busy) { return out.total_latency > 0.0 ? busy / out.total_latency : 0.0; };
    out.utilization.reserve(terminals + timeline.server_busy.size());
    for (double busy : local_busy) {
        out.utilization.push_back(utilization(busy));
    }
    for (double busy : timeline.server_busy) {
        out.utilization.push_back(utilization(busy));
    }
    bool const uniform = std::adjacent_find(out.utilization.begin(), out.utilization.end(),
                                            std::not_equal_to<>()) == out.utilization.end();
    if (!uniform) {
        double mean = 0.0;
        for (double value : out.utilization) {
            mean += value;
        }
        mean /= static_cast<double>(out.utilization.size());
        double sq = 0.0;
        for (double value : out.utilization) {
            sq += (value - mean) * (value - mean);
        }
        out.load_balance = std::sqrt(sq / static_cast<double>(out.utilization.size()));
    }
    return out;
}

auto eval_offload(EdgeInstance const& instance, OffloadPlan const& plan) -> ObjectiveVector {
    auto const b = offload_breakdown(instance, plan);
    return {b.total_latency, b.energy, b.cost, b.load_balance};
}

} // namespace emtedge::model

#ifndef EMTEDGE_MODEL_OFFLOAD_HPP
#define EMTEDGE_MODEL_OFFLOAD_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "emtedge/model/instance.hpp"
#include "emtedge/objectives.hpp"

namespace emtedge::model {

enum class Placement : unsigned char { local, edge };

// Per terminal, per subtask: where it runs, and (for edge subtasks) which
// server runs it. Servers are filled in by assign_servers().
struct OffloadPlan {
    std::vector<std::vector<Placement>> place;
    std::vector<std::vector<std::optional<std::size_t>>> server;

    friend auto operator==(OffloadPlan const&, OffloadPlan const&) -> bool = default;
};

// Builds a plan from placements alone, with servers chosen by the
// earliest-available-server rule.
[[nodiscard]] auto make_offload_plan(EdgeInstance const& instance, std::vector<std::vector<Placement>> place)
    -> OffloadPlan;

// Earliest-available-server greedy: subtasks in (terminal, subtask) order go
// to the server whose queue frees up first, ties to the lowest index.
void assign_servers(EdgeInstance const& instance, OffloadPlan& plan);

struct ScheduledSubtask {
    std::size_t terminal{};
    std::size_t subtask{};
    std::size_t server{};
    double start{};
    double finish{};
    double service{};
};

struct ScheduleTimeline {
    std::vector<ScheduledSubtask> entries;  // in scheduling order
    std::vector<double> terminal_edge_span; // Tedge_k, 0 when nothing is offloaded
    std::vector<double> server_busy;        // total service time per server
};

// Throws MalformedPlanError if the plan does not match the instance shape or
// an edge subtask lacks a valid server.
[[nodiscard]] auto schedule_offload(EdgeInstance const& instance, OffloadPlan const& plan) -> ScheduleTimeline;

struct OffloadBreakdown {
    double local_latency{};
    double edge_latency{};
    double total_latency{};
    double local_energy{};
    double edge_energy{};
    double energy{};
    double cost{};
    std::vector<double> utilization; // K terminals, then the edge servers
    double load_balance{};
};

[[nodiscard]] auto offload_breakdown(EdgeInstance const& instance, OffloadPlan const& plan) -> OffloadBreakdown;

// (T_offload, E_offload, Cost_offload, L_offload)
[[nodiscard]] auto eval_offload(EdgeInstance const& instance, OffloadPlan const& plan) -> ObjectiveVector;

} // namespace emtedge::model

#endif // EMTEDGE_MODEL_OFFLOAD_HPP

#ifndef EMTEDGE_MODEL_INSTANCE_HPP
#define EMTEDGE_MODEL_INSTANCE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace emtedge::model {

// Meters, 3-D.
using Position = std::array<double, 3>;

[[nodiscard]] auto distance(Position const& a, Position const& b) -> double;

struct EdgeCloud {
    std::size_t id{};
    Position position{};
    double capacity{};           // service units
    double cpu{};                // cycles / s
    double energy_per_service{}; // J
    double coverage_radius{};    // m
    double price_per_second{};   // cost units / s
    double fixed_cost{};         // cost units
    double line_cost{};          // cost units per meter of line

    friend auto operator==(EdgeCloud const&, EdgeCloud const&) -> bool = default;
};

struct User {
    std::size_t id{};
    double service_requirement{}; // service units
    double compute_demand{};      // cycles
    double transmit_rate{};       // bits / s
    std::vector<double> comm_latency; // s, one entry per edge cloud

    friend auto operator==(User const&, User const&) -> bool = default;
};

struct Subtask {
    double data_bits{};
    double local_cycles{};
    double edge_cycles{};

    friend auto operator==(Subtask const&, Subtask const&) -> bool = default;
};

struct Terminal {
    std::size_t id{};
    double local_speed{}; // cycles / s
    double local_power{}; // W
    std::vector<Subtask> subtasks; // linear precedence chain, in order
    double transport_cost{};

    friend auto operator==(Terminal const&, Terminal const&) -> bool = default;
};

struct Constants {
    double edge_power{}; // W, shared by all edge servers

    friend auto operator==(Constants const&, Constants const&) -> bool = default;
};

// Immutable description of one MEC scenario. All quantities SI.
struct EdgeInstance {
    std::vector<EdgeCloud> edge_clouds;
    std::vector<User> users;
    std::vector<Position> base_stations;
    std::vector<Terminal> terminals;
    Constants constants;

    [[nodiscard]] auto total_subtasks() const noexcept -> std::size_t;

    friend auto operator==(EdgeInstance const&, EdgeInstance const&) -> bool = default;
};

// Lists every violated type invariant; empty means the instance is valid.
[[nodiscard]] auto find_violations(EdgeInstance const& instance) -> std::vector<std::string>;

// Throws ValidationError when find_violations() is non-empty.
void validate(EdgeInstance const& instance);

} // namespace emtedge::model

#endif // EMTEDGE_MODEL_INSTANCE_HPP

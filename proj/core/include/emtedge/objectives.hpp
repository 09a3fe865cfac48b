#ifndef EMTEDGE_OBJECTIVES_HPP
#define EMTEDGE_OBJECTIVES_HPP

#include <array>
#include <cstddef>
#include <string_view>

namespace emtedge {

inline constexpr std::size_t kObjectiveCount = 4;
inline constexpr std::size_t kTaskCount = 2;

// Four objective values, always in minimization orientation. Reliability is
// stored negated; see display_value() for the reporting boundary.
using ObjectiveVector = std::array<double, kObjectiveCount>;

enum class Task : std::size_t {
    deployment = 0, // service deployment (task 1)
    offload = 1,    // task offloading (task 2)
};

[[nodiscard]] constexpr auto task_index(Task t) noexcept -> std::size_t { return static_cast<std::size_t>(t); }
[[nodiscard]] constexpr auto task_from_index(std::size_t i) noexcept -> Task { return static_cast<Task>(i); }

// 1-based label used in reports ("task 1", "task 2").
[[nodiscard]] constexpr auto task_number(Task t) noexcept -> int { return static_cast<int>(task_index(t)) + 1; }

enum class Direction { minimize, maximize };

struct ObjectiveInfo {
    std::string_view name;
    Direction direction;
};

inline constexpr std::array<std::array<ObjectiveInfo, kObjectiveCount>, kTaskCount> kObjectiveInfo{{
    {{{"deployment_latency", Direction::minimize},
      {"deployment_energy", Direction::minimize},
      {"deployment_cost", Direction::minimize},
      {"network_reliability", Direction::maximize}}},
    {{{"offload_latency", Direction::minimize},
      {"offload_energy", Direction::minimize},
      {"offload_cost", Direction::minimize},
      {"load_balance", Direction::minimize}}},
}};

[[nodiscard]] constexpr auto objective_info(Task t, std::size_t k) -> ObjectiveInfo const& {
    return kObjectiveInfo[task_index(t)][k];
}

// Converts an internal (minimized) value to its reported orientation.
[[nodiscard]] constexpr auto display_value(Task t, std::size_t k, double internal) -> double {
    return objective_info(t, k).direction == Direction::maximize ? -internal : internal;
}

[[nodiscard]] constexpr auto internal_value(Task t, std::size_t k, double displayed) -> double {
    return display_value(t, k, displayed); // sign flip is an involution
}

// True when `a` is at least as good as `b` in displayed orientation.
[[nodiscard]] constexpr auto display_no_worse(Direction d, double a, double b) -> bool {
    return d == Direction::minimize ? a <= b : a >= b;
}

} // namespace emtedge

#endif // EMTEDGE_OBJECTIVES_HPP

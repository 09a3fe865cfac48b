#ifndef EMTEDGE_TESTS_FIXTURES_HPP
#define EMTEDGE_TESTS_FIXTURES_HPP

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "emtedge/model/deployment.hpp"
#include "emtedge/model/instance.hpp"
#include "emtedge/model/offload.hpp"
#include "emtedge/selection/objective_matrix.hpp"

namespace emtedge::fixture {

// Small random instance: up to `max_users` users, `max_clouds` clouds,
// `max_terminals` terminals with up to `max_subtasks` subtasks each.
// Capacities are wide enough that any assignment is feasible when
// `roomy` is set.
struct SmallShape {
    std::size_t max_users = 5;
    std::size_t max_clouds = 3;
    std::size_t max_terminals = 3;
    std::size_t max_subtasks = 3;
    std::size_t max_stations = 4;
    bool roomy = true;
};

auto random_small_instance(std::mt19937_64& rng, SmallShape const& shape = {}) -> model::EdgeInstance;

auto random_assignment(model::EdgeInstance const& instance, std::mt19937_64& rng) -> model::DeploymentPlan;
auto random_placement(model::EdgeInstance const& instance, std::mt19937_64& rng, double edge_share = 0.5)
    -> std::vector<std::vector<model::Placement>>;

// Random rows with entries uniform in [0, 1).
auto random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) -> selection::ObjectiveMatrix;
// Rows on the simplex x1 + ... + xm = 1, so all are mutually non-dominated.
auto random_front(std::size_t rows, std::size_t cols, std::mt19937_64& rng) -> selection::ObjectiveMatrix;

// Instance with U users, N clouds, K terminals of one subtask, all values 1.
auto unit_instance(std::size_t users, std::size_t clouds, std::size_t terminals) -> model::EdgeInstance;

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(std::string const& tag);
    ~TempDir();
    TempDir(TempDir const&) = delete;
    auto operator=(TempDir const&) -> TempDir& = delete;

    [[nodiscard]] auto path() const -> std::filesystem::path const& { return path_; }
    [[nodiscard]] auto operator/(std::string const& name) const -> std::filesystem::path { return path_ / name; }

private:
    std::filesystem::path path_;
};

} // namespace emtedge::fixture

#endif // EMTEDGE_TESTS_FIXTURES_HPP

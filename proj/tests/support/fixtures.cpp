#include "fixtures.hpp"

#include <atomic>

#include <unistd.h>

namespace emtedge::fixture {

namespace {

auto uniform(std::mt19937_64& rng, double lo, double hi) -> double {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

auto count(std::mt19937_64& rng, std::size_t hi) -> std::size_t {
    return std::uniform_int_distribution<std::size_t>(1, hi)(rng);
}

auto random_position(std::mt19937_64& rng) -> model::Position {
    return {uniform(rng, 0.0, 300.0), uniform(rng, 0.0, 300.0), uniform(rng, 0.0, 300.0)};
}

} // namespace

auto random_small_instance(std::mt19937_64& rng, SmallShape const& shape) -> model::EdgeInstance {
    model::EdgeInstance inst;
    auto const clouds = count(rng, shape.max_clouds);
    auto const users = count(rng, shape.max_users);
    for (std::size_t i = 0; i < clouds; ++i) {
        model::EdgeCloud c;
        c.id = i;
        c.position = random_position(rng);
        c.capacity = shape.roomy ? 2.0 * static_cast<double>(users) + 1.0 : uniform(rng, 1.0, 4.0);
        c.cpu = uniform(rng, 1.0e9, 3.0e9);
        c.energy_per_service = uniform(rng, 0.02, 0.05);
        c.coverage_radius = uniform(rng, 50.0, 250.0);
        c.price_per_second = uniform(rng, 0.5, 2.0);
        c.fixed_cost = uniform(rng, 100.0, 1000.0);
        c.line_cost = uniform(rng, 0.5, 3.0);
        inst.edge_clouds.push_back(c);
    }
    for (std::size_t u = 0; u < users; ++u) {
        model::User user;
        user.id = u;
        user.service_requirement = uniform(rng, 0.5, 2.0);
        user.compute_demand = uniform(rng, 1.0e6, 3.0e8);
        user.transmit_rate = uniform(rng, 1.0e5, 2.0e5);
        for (std::size_t i = 0; i < clouds; ++i) {
            user.comm_latency.push_back(uniform(rng, 1.0e-3, 5.0e-3));
        }
        inst.users.push_back(std::move(user));
    }
    auto const stations = count(rng, shape.max_stations);
    for (std::size_t j = 0; j < stations; ++j) {
        inst.base_stations.push_back(random_position(rng));
    }
    auto const terminals = count(rng, shape.max_terminals);
    for (std::size_t k = 0; k < terminals; ++k) {
        model::Terminal t;
        t.id = k;
        t.local_speed = uniform(rng, 0.5e9, 1.2e9);
        t.local_power = uniform(rng, 0.5, 1.0);
        t.transport_cost = uniform(rng, 1.0, 5.0);
        auto const subtasks = count(rng, shape.max_subtasks);
        for (std::size_t n = 0; n < subtasks; ++n) {
            t.subtasks.push_back({uniform(rng, 1.0e5, 1.0e6), uniform(rng, 1.0e8, 2.0e9), uniform(rng, 1.0e9, 5.0e9)});
        }
        inst.terminals.push_back(std::move(t));
    }
    inst.constants.edge_power = uniform(rng, 1.0, 10.0);
    return inst;
}

auto random_assignment(model::EdgeInstance const& instance, std::mt19937_64& rng) -> model::DeploymentPlan {
    std::uniform_int_distribution<std::size_t> pick(0, instance.edge_clouds.size() - 1);
    model::DeploymentPlan plan;
    for (std::size_t u = 0; u < instance.users.size(); ++u) {
        plan.assignment.push_back(pick(rng));
    }
    return plan;
}

auto random_placement(model::EdgeInstance const& instance, std::mt19937_64& rng, double edge_share)
    -> std::vector<std::vector<model::Placement>> {
    std::bernoulli_distribution edge(edge_share);
    std::vector<std::vector<model::Placement>> place;
    for (auto const& t : instance.terminals) {
        auto& row = place.emplace_back();
        for (std::size_t n = 0; n < t.subtasks.size(); ++n) {
            row.push_back(edge(rng) ? model::Placement::edge : model::Placement::local);
        }
    }
    return place;
}

auto random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) -> selection::ObjectiveMatrix {
    selection::ObjectiveMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = uniform(rng, 0.0, 1.0);
        }
    }
    return m;
}

auto random_front(std::size_t rows, std::size_t cols, std::mt19937_64& rng) -> selection::ObjectiveMatrix {
    selection::ObjectiveMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = uniform(rng, 0.01, 1.0);
            sum += m(i, k);
        }
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) /= sum;
        }
    }
    return m;
}

auto unit_instance(std::size_t users, std::size_t clouds, std::size_t terminals) -> model::EdgeInstance {
    model::EdgeInstance inst;
    for (std::size_t i = 0; i < clouds; ++i) {
        inst.edge_clouds.push_back({i, {0.0, 0.0, 0.0}, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
    }
    for (std::size_t u = 0; u < users; ++u) {
        inst.users.push_back({u, 1.0, 1.0, 1.0, std::vector<double>(clouds, 1.0)});
    }
    inst.base_stations.push_back({0.0, 0.0, 0.0});
    for (std::size_t k = 0; k < terminals; ++k) {
        inst.terminals.push_back({k, 1.0, 1.0, {{1.0, 1.0, 1.0}}, 1.0});
    }
    inst.constants.edge_power = 1.0;
    return inst;
}

TempDir::TempDir(std::string const& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("emtedge-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

} // namespace emtedge::fixture

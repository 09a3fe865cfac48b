#include "emtedge/model/generator.hpp"

#include <random>
#include <string>

#include "emtedge/errors.hpp"

namespace emtedge::model {

namespace {

void check_range(Range const& r, char const* name) {
    if (!(r.lo <= r.hi)) {
        throw ConfigError(std::string("generator range '") + name + "' is inverted (lo " + std::to_string(r.lo) +
                          " > hi " + std::to_string(r.hi) + ")");
    }
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    auto operator()(Range const& r) -> double {
        if (r.lo == r.hi) {
            return r.lo;
        }
        return std::uniform_real_distribution<double>(r.lo, r.hi)(engine_);
    }

    auto position(double box) -> Position { return {(*this)({0.0, box}), (*this)({0.0, box}), (*this)({0.0, box})}; }

private:
    std::mt19937_64 engine_;
};

} // namespace

void validate(GenConfig const& c) {
    if (c.edge_clouds == 0) {
        throw ConfigError("generator needs at least one edge cloud");
    }
    if (c.subtasks_per_terminal == 0) {
        throw ConfigError("generator needs at least one subtask per terminal");
    }
    if (!(c.box_size > 0.0)) {
        throw ConfigError("generator box_size must be > 0");
    }
    if (!(c.propagation_speed > 0.0)) {
        throw ConfigError("generator propagation_speed must be > 0");
    }
    check_range(c.server_cpu, "server_cpu");
    check_range(c.local_speed, "local_speed");
    check_range(c.transmit_rate, "transmit_rate");
    check_range(c.local_power, "local_power");
    check_range(c.local_cycles, "local_cycles");
    check_range(c.edge_cycles, "edge_cycles");
    check_range(c.data_bits, "data_bits");
    check_range(c.coverage_radius, "coverage_radius");
    check_range(c.capacity, "capacity");
    check_range(c.service_requirement, "service_requirement");
    check_range(c.compute_demand, "compute_demand");
    check_range(c.energy_per_service, "energy_per_service");
    check_range(c.price_per_second, "price_per_second");
    check_range(c.transport_cost, "transport_cost");
    check_range(c.latency_jitter, "latency_jitter");
}

auto generate_instance(GenConfig const& c, std::uint64_t seed) -> EdgeInstance {
    validate(c);
    Sampler draw(seed);
    EdgeInstance inst;

    inst.edge_clouds.reserve(c.edge_clouds);
    for (std::size_t i = 0; i < c.edge_clouds; ++i) {
        EdgeCloud cloud;
        cloud.id = i;
        cloud.position = draw.position(c.box_size);
        cloud.capacity = draw(c.capacity);
        cloud.cpu = draw(c.server_cpu);
        cloud.energy_per_service = draw(c.energy_per_service);
        cloud.coverage_radius = draw(c.coverage_radius);
        cloud.price_per_second = draw(c.price_per_second);
        cloud.fixed_cost = c.fixed_cost;
        cloud.line_cost = c.line_cost;
        inst.edge_clouds.push_back(cloud);
    }

    inst.base_stations.reserve(c.base_stations);
    for (std::size_t s = 0; s < c.base_stations; ++s) {
        inst.base_stations.push_back(draw.position(c.box_size));
    }

    // Users only need a location to derive their latency vector.
    inst.users.reserve(c.users);
    for (std::size_t u = 0; u < c.users; ++u) {
        User user;
        user.id = u;
        auto const where = draw.position(c.box_size);
        user.service_requirement = draw(c.service_requirement);
        user.compute_demand = draw(c.compute_demand);
        user.transmit_rate = draw(c.transmit_rate);
        user.comm_latency.reserve(c.edge_clouds);
        for (auto const& cloud : inst.edge_clouds) {
            user.comm_latency.push_back(distance(where, cloud.position) / c.propagation_speed + draw(c.latency_jitter));
        }
        inst.users.push_back(std::move(user));
    }

    inst.terminals.reserve(c.terminals);
    for (std::size_t k = 0; k < c.terminals; ++k) {
        Terminal t;
        t.id = k;
        t.local_speed = draw(c.local_speed);
        t.local_power = draw(c.local_power);
        t.transport_cost = draw(c.transport_cost);
        t.subtasks.reserve(c.subtasks_per_terminal);
        for (std::size_t n = 0; n < c.subtasks_per_terminal; ++n) {
            Subtask st;
            st.data_bits = draw(c.data_bits);
            st.local_cycles = draw(c.local_cycles);
            st.edge_cycles = draw(c.edge_cycles);
            t.subtasks.push_back(st);
        }
        inst.terminals.push_back(std::move(t));
    }

    inst.constants.edge_power = c.edge_power;
    return inst;
}

} // namespace emtedge::model

#ifndef EMTEDGE_MODEL_GENERATOR_HPP
#define EMTEDGE_MODEL_GENERATOR_HPP

#include <cstddef>
#include <cstdint>

#include "emtedge/model/instance.hpp"

namespace emtedge::model {

// Closed interval for uniform draws; lo == hi gives a constant.
struct Range {
    double lo{};
    double hi{};

    friend auto operator==(Range const&, Range const&) -> bool = default;
};

// Defaults follow the published experimental setting where one exists
// (20 servers, 1.0-3.0 GHz servers, 0.5-1.2 GHz terminals, 170 kHz rate,
// 0.8 W terminals, 1200/4000 megacycle subtasks, 100-150 m coverage,
// 3 km cube); the rest are chosen so capacity occasionally binds.
struct GenConfig {
    std::size_t edge_clouds = 20;
    std::size_t users = 40;
    std::size_t terminals = 20;
    std::size_t base_stations = 15;
    std::size_t subtasks_per_terminal = 5;

    double box_size = 3000.0; // m, cube edge

    Range server_cpu{1.0e9, 3.0e9};
    Range local_speed{0.5e9, 1.2e9};
    Range transmit_rate{170.0e3, 170.0e3};
    Range local_power{0.8, 0.8};
    Range local_cycles{1200.0e6, 1200.0e6};
    Range edge_cycles{4000.0e6, 4000.0e6};
    Range data_bits{0.1e6, 1.0e6};
    Range coverage_radius{100.0, 150.0};

    Range capacity{5.0, 10.0};
    Range service_requirement{1.0, 1.0};
    Range compute_demand{100.0e6, 300.0e6};
    Range energy_per_service{0.02, 0.05};
    Range price_per_second{0.5, 2.0};
    Range transport_cost{1.0, 5.0};
    Range latency_jitter{1.0e-3, 5.0e-3};
    double propagation_speed = 3.0e8; // m/s
    double fixed_cost = 1000.0;
    double line_cost = 2.0; // per meter
    double edge_power = 5.0; // W

    friend auto operator==(GenConfig const&, GenConfig const&) -> bool = default;
};

// Throws ConfigError on an inverted range or a zero count.
void validate(GenConfig const& config);

[[nodiscard]] auto generate_instance(GenConfig const& config, std::uint64_t seed) -> EdgeInstance;

} // namespace emtedge::model

#endif // EMTEDGE_MODEL_GENERATOR_HPP

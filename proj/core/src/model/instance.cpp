#include "emtedge/model/instance.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "emtedge/errors.hpp"

namespace emtedge::model {

auto distance(Position const& a, Position const& b) -> double {
    double const dx = a[0] - b[0];
    double const dy = a[1] - b[1];
    double const dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

auto EdgeInstance::total_subtasks() const noexcept -> std::size_t {
    return std::accumulate(terminals.begin(), terminals.end(), std::size_t{0},
                           [](std::size_t n, Terminal const& t) { return n + t.subtasks.size(); });
}

namespace {

class ViolationCollector {
public:
    void positive(double v, std::string const& where, char const* field) {
        if (!(std::isfinite(v) && v > 0.0)) {
            out_.push_back(where + "." + field + " must be finite and > 0 (got " + std::to_string(v) + ")");
        }
    }
    void non_negative(double v, std::string const& where, char const* field) {
        if (!(std::isfinite(v) && v >= 0.0)) {
            out_.push_back(where + "." + field + " must be finite and >= 0 (got " + std::to_string(v) + ")");
        }
    }
    void finite(Position const& p, std::string const& where) {
        for (double c : p) {
            if (!std::isfinite(c)) {
                out_.push_back(where + " has a non-finite coordinate");
                return;
            }
        }
    }
    void add(std::string s) { out_.push_back(std::move(s)); }

    auto take() -> std::vector<std::string> { return std::move(out_); }

private:
    std::vector<std::string> out_;
};

} // namespace

auto find_violations(EdgeInstance const& instance) -> std::vector<std::string> {
    ViolationCollector v;
    if (instance.edge_clouds.empty()) {
        v.add("edge_clouds must not be empty");
    }
    for (std::size_t i = 0; i < instance.edge_clouds.size(); ++i) {
        auto const& c = instance.edge_clouds[i];
        auto const where = "edge_clouds[" + std::to_string(i) + "]";
        v.finite(c.position, where + ".position");
        v.positive(c.capacity, where, "capacity (Φ_i)");
        v.positive(c.cpu, where, "cpu (C_i)");
        v.non_negative(c.energy_per_service, where, "energy_per_service (e_j)");
        v.positive(c.coverage_radius, where, "coverage_radius (R_m)");
        v.non_negative(c.price_per_second, where, "price_per_second (P_i)");
        v.non_negative(c.fixed_cost, where, "fixed_cost (f_α)");
        v.non_negative(c.line_cost, where, "line_cost (f_β)");
    }
    for (std::size_t u = 0; u < instance.users.size(); ++u) {
        auto const& user = instance.users[u];
        auto const where = "users[" + std::to_string(u) + "] (id " + std::to_string(user.id) + ")";
        v.non_negative(user.service_requirement, where, "service_requirement (r_u)");
        v.non_negative(user.compute_demand, where, "compute_demand (γ_u)");
        v.positive(user.transmit_rate, where, "transmit_rate (v_u)");
        if (user.comm_latency.size() != instance.edge_clouds.size()) {
            v.add(where + ".comm_latency (φ_u) has " + std::to_string(user.comm_latency.size()) +
                  " entries, expected " + std::to_string(instance.edge_clouds.size()));
        }
        for (double phi : user.comm_latency) {
            if (!(std::isfinite(phi) && phi >= 0.0)) {
                v.add(where + ".comm_latency (φ_u) entries must be finite and >= 0");
                break;
            }
        }
    }
    for (std::size_t s = 0; s < instance.base_stations.size(); ++s) {
        v.finite(instance.base_stations[s], "base_stations[" + std::to_string(s) + "]");
    }
    for (std::size_t k = 0; k < instance.terminals.size(); ++k) {
        auto const& t = instance.terminals[k];
        auto const where = "terminals[" + std::to_string(k) + "] (id " + std::to_string(t.id) + ")";
        v.positive(t.local_speed, where, "local_speed (F_k,local)");
        v.positive(t.local_power, where, "local_power (P_local)");
        v.non_negative(t.transport_cost, where, "transport_cost (Q_k)");
        if (t.subtasks.empty()) {
            v.add(where + ".subtasks must contain at least one subtask");
        }
        for (std::size_t n = 0; n < t.subtasks.size(); ++n) {
            auto const& st = t.subtasks[n];
            auto const sw = where + ".subtasks[" + std::to_string(n) + "]";
            v.non_negative(st.data_bits, sw, "data_bits (b_kn)");
            v.non_negative(st.local_cycles, sw, "local_cycles (c_kn)");
            v.non_negative(st.edge_cycles, sw, "edge_cycles (d_kn)");
        }
    }
    v.positive(instance.constants.edge_power, "constants", "edge_power (P_edge)");
    return v.take();
}

void validate(EdgeInstance const& instance) {
    auto violations = find_violations(instance);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
}

} // namespace emtedge::model

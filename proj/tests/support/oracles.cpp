#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace emtedge::oracle {

namespace {

auto dist3(model::Position const& a, model::Position const& b) -> double {
    return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]));
}

auto dominated_by(selection::ObjectiveMatrix const& m, std::size_t a, std::size_t b) -> bool {
    // true iff row b dominates row a
    bool better = false;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        if (m(b, k) > m(a, k)) {
            return false;
        }
        if (m(b, k) < m(a, k)) {
            better = true;
        }
    }
    return better;
}

} // namespace

auto one_hot(std::vector<std::size_t> const& assignment, std::size_t clouds) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> x(assignment.size(), std::vector<int>(clouds, 0));
    for (std::size_t u = 0; u < assignment.size(); ++u) {
        x[u][assignment[u]] = 1;
    }
    return x;
}

auto deployment_objectives(model::EdgeInstance const& inst, std::vector<std::vector<int>> const& x) -> ObjectiveVector {
    auto const N = inst.edge_clouds.size();
    auto const S = inst.base_stations.size();
    double t_comm = 0.0;
    double t_comp = 0.0;
    double t_trans = 0.0;
    double energy = 0.0;
    for (std::size_t u = 0; u < inst.users.size(); ++u) {
        auto const& user = inst.users[u];
        double capacity = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            t_comm += user.comm_latency[i] * x[u][i];
            capacity += inst.edge_clouds[i].cpu * x[u][i];
            energy += inst.edge_clouds[i].energy_per_service * x[u][i];
        }
        t_comp += user.compute_demand / capacity;
        t_trans += user.compute_demand / user.transmit_rate;
    }
    double cost = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        int used = 0;
        for (std::size_t u = 0; u < inst.users.size(); ++u) {
            used |= x[u][i];
        }
        if (used == 0) {
            continue;
        }
        double wire = std::numeric_limits<double>::infinity();
        for (auto const& station : inst.base_stations) {
            wire = std::min(wire, dist3(inst.edge_clouds[i].position, station));
        }
        if (S == 0) {
            wire = 0.0;
        }
        cost += inst.edge_clouds[i].fixed_cost + inst.edge_clouds[i].line_cost * wire;
    }
    double covered = 0.0;
    for (std::size_t j = 0; j < S; ++j) {
        for (std::size_t i = 0; i < N; ++i) {
            if (dist3(inst.edge_clouds[i].position, inst.base_stations[j]) <= inst.edge_clouds[i].coverage_radius) {
                covered += 1.0;
            }
        }
    }
    double const re = S == 0 ? 0.0 : covered / static_cast<double>(S * S);
    return {t_comm + t_comp + t_trans, energy, cost, -re};
}

auto local_flags(std::vector<std::vector<model::Placement>> const& place) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> s;
    for (auto const& row : place) {
        auto& out = s.emplace_back();
        for (auto p : row) {
            out.push_back(p == model::Placement::local ? 1 : 0);
        }
    }
    return s;
}

auto greedy_servers(model::EdgeInstance const& inst, std::vector<std::vector<int>> const& s)
    -> std::vector<std::vector<std::optional<std::size_t>>> {
    auto const L = inst.edge_clouds.size();
    std::vector<double> free_at(L, 0.0);
    std::vector<std::vector<std::optional<std::size_t>>> server(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        server[k].resize(s[k].size());
        double chain = 0.0;
        for (std::size_t n = 0; n < s[k].size(); ++n) {
            if (s[k][n] == 1) {
                continue;
            }
            std::size_t pick = 0;
            for (std::size_t i = 1; i < L; ++i) {
                if (free_at[i] < free_at[pick]) {
                    pick = i;
                }
            }
            double const st = std::max(free_at[pick], chain);
            double const et = st + inst.terminals[k].subtasks[n].edge_cycles / inst.edge_clouds[pick].cpu;
            free_at[pick] = et;
            chain = et;
            server[k][n] = pick;
        }
    }
    return server;
}

auto offload_objectives(model::EdgeInstance const& inst, std::vector<std::vector<int>> const& s,
                        std::vector<std::vector<std::optional<std::size_t>>> const& server) -> ObjectiveVector {
    auto const K = inst.terminals.size();
    auto const L = inst.edge_clouds.size();

    // Local time per terminal and its maximum.
    std::vector<double> local(K, 0.0);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t n = 0; n < s[k].size(); ++n) {
            local[k] += s[k][n] * inst.terminals[k].subtasks[n].local_cycles / inst.terminals[k].local_speed;
        }
    }
    std::size_t arg = 0;
    for (std::size_t k = 1; k < K; ++k) {
        if (local[k] > local[arg]) {
            arg = k;
        }
    }
    double const t_local = K == 0 ? 0.0 : local[arg];

    // Edge timeline: ET = ST + Tser, ST = max(server free, previous ET).
    std::vector<double> free_at(L, 0.0);
    std::vector<double> busy(L, 0.0);
    double t_edge = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        std::optional<double> first_st;
        double last_et = 0.0;
        for (std::size_t n = 0; n < s[k].size(); ++n) {
            if (s[k][n] == 1) {
                continue;
            }
            auto const i = *server[k][n];
            double const tser = inst.terminals[k].subtasks[n].edge_cycles / inst.edge_clouds[i].cpu;
            double const st = std::max(free_at[i], last_et);
            double const et = st + tser;
            free_at[i] = et;
            busy[i] += tser;
            if (!first_st) {
                first_st = st;
            }
            last_et = et;
        }
        double const tedge = first_st ? last_et - *first_st : 0.0;
        t_edge = std::max(t_edge, tedge);
    }
    double const t_off = t_local + t_edge;
    double const p_local = K == 0 ? 0.0 : inst.terminals[arg].local_power;
    double const energy = t_local * p_local + t_edge * inst.constants.edge_power;

    double cost = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        double price = 0.0;
        for (std::size_t n = 0; n < s[k].size(); ++n) {
            if (s[k][n] == 0) {
                price = inst.edge_clouds[*server[k][n]].price_per_second;
                break;
            }
        }
        cost += t_off * price + inst.terminals[k].transport_cost;
    }

    std::vector<double> util;
    for (std::size_t k = 0; k < K; ++k) {
        util.push_back(t_off == 0.0 ? 0.0 : local[k] / t_off);
    }
    for (std::size_t i = 0; i < L; ++i) {
        util.push_back(t_off == 0.0 ? 0.0 : busy[i] / t_off);
    }
    double mean = std::accumulate(util.begin(), util.end(), 0.0) / static_cast<double>(util.size());
    double var = 0.0;
    for (double v : util) {
        var += (v - mean) * (v - mean);
    }
    double const lb = std::sqrt(var / static_cast<double>(util.size()));
    return {t_off, energy, cost, lb};
}

auto front_numbers(selection::ObjectiveMatrix const& m) -> std::vector<std::size_t> {
    auto const n = m.rows();
    std::vector<std::size_t> front(n, n);
    std::size_t assigned = 0;
    for (std::size_t f = 0; assigned < n; ++f) {
        std::vector<std::size_t> layer;
        for (std::size_t i = 0; i < n; ++i) {
            if (front[i] != n) {
                continue;
            }
            bool dominated = false;
            for (std::size_t j = 0; j < n && !dominated; ++j) {
                dominated = j != i && front[j] == n && dominated_by(m, i, j);
            }
            if (!dominated) {
                layer.push_back(i);
            }
        }
        for (auto i : layer) {
            front[i] = f;
        }
        assigned += layer.size();
    }
    return front;
}

auto sde(selection::ObjectiveMatrix const& m) -> std::vector<double> {
    std::vector<double> out(m.rows(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.rows(); ++j) {
            if (i == j) {
                continue;
            }
            double d2 = 0.0;
            for (std::size_t k = 0; k < m.cols(); ++k) {
                double const shifted = m(j, k) < m(i, k) ? m(i, k) : m(j, k);
                d2 += (shifted - m(i, k)) * (shifted - m(i, k));
            }
            out[i] = std::min(out[i], std::sqrt(d2));
        }
    }
    return out;
}

auto minmax(selection::ObjectiveMatrix const& m) -> selection::ObjectiveMatrix {
    selection::ObjectiveMatrix out(m.rows(), m.cols());
    for (std::size_t k = 0; k < m.cols(); ++k) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            lo = std::min(lo, m(i, k));
            hi = std::max(hi, m(i, k));
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out(i, k) = hi > lo ? (m(i, k) - lo) / (hi - lo) : 0.0;
        }
    }
    return out;
}

auto archive(selection::ObjectiveMatrix const& m, std::size_t capacity) -> std::vector<std::size_t> {
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < m.rows(); ++j) {
            if (j != i && dominated_by(m, i, j)) {
                keep = false;
            }
        }
        for (auto a : alive) {
            bool same = true;
            for (std::size_t k = 0; k < m.cols(); ++k) {
                same = same && m(a, k) == m(i, k);
            }
            if (same) {
                keep = false;
            }
        }
        if (keep) {
            alive.push_back(i);
        }
    }
    if (alive.size() <= capacity) {
        return alive;
    }
    if (capacity == 0) {
        return {};
    }
    auto const scaled = minmax(m.subset(alive));

    std::vector<bool> exempt(alive.size(), false);
    for (std::size_t k = 0; k < m.cols(); ++k) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            if (scaled(i, k) < scaled(best, k)) {
                best = i;
            }
        }
        exempt[best] = true;
    }
    if (static_cast<std::size_t>(std::count(exempt.begin(), exempt.end(), true)) > capacity) {
        exempt.assign(alive.size(), false);
    }

    std::vector<std::size_t> left(alive.size());
    std::iota(left.begin(), left.end(), std::size_t{0});
    while (left.size() > capacity) {
        auto const fit = sde(scaled.subset(left));
        std::size_t victim = left.size();
        for (std::size_t p = 0; p < left.size(); ++p) {
            if (exempt[left[p]]) {
                continue;
            }
            if (victim == left.size() || fit[p] < fit[victim]) {
                victim = p;
            }
        }
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    std::vector<std::size_t> out;
    for (auto p : left) {
        out.push_back(alive[p]);
    }
    return out;
}

auto front_sde_order(selection::ObjectiveMatrix const& m) -> std::vector<std::size_t> {
    auto const front = front_numbers(m);
    auto const scaled = minmax(m);
    std::vector<double> crowd(m.rows(), 0.0);
    std::size_t const fronts = m.rows() == 0 ? 0 : *std::max_element(front.begin(), front.end()) + 1;
    for (std::size_t f = 0; f < fronts; ++f) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (front[i] == f) {
                members.push_back(i);
            }
        }
        auto const fit = sde(scaled.subset(members));
        for (std::size_t p = 0; p < members.size(); ++p) {
            crowd[members[p]] = fit[p];
        }
    }
    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (front[a] != front[b]) {
            return front[a] < front[b];
        }
        return crowd[a] > crowd[b];
    });
    return order;
}

} // namespace emtedge::oracle

#include "emtedge/selection/selectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "emtedge/errors.hpp"
#include "emtedge/selection/dominance.hpp"
#include "emtedge/selection/geometry.hpp"

namespace emtedge::selection {

namespace {

void require_count(ObjectiveMatrix const& pool, std::size_t count, char const* who) {
    if (count > pool.rows()) {
        throw ContractViolation(std::string(who) + ": asked for " + std::to_string(count) + " of " +
                                std::to_string(pool.rows()) + " solutions");
    }
}

auto all_rows(std::size_t n) -> std::vector<std::size_t> {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = i;
    }
    return out;
}

} // namespace

auto select_vector_angle(ObjectiveMatrix const& pool, std::size_t count) -> std::vector<std::size_t> {
    require_count(pool, count, "select_vector_angle");
    auto const n = pool.rows();
    if (count == n) {
        return all_rows(n);
    }
    auto const normalized = normalize(pool).values;

    std::vector<std::size_t> chosen;
    chosen.reserve(count);
    std::vector<bool> taken(n, false);
    std::vector<double> min_angle(n, std::numeric_limits<double>::infinity());

    auto take = [&](std::size_t c) {
        taken[c] = true;
        chosen.push_back(c);
        for (std::size_t i = 0; i < n; ++i) {
            if (!taken[i]) {
                min_angle[i] = std::min(min_angle[i], vector_angle(normalized.row(i), normalized.row(c)));
            }
        }
    };

    for (std::size_t k = 0; k < pool.cols() && chosen.size() < count; ++k) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (pool(i, k) < pool(best, k)) {
                best = i;
            }
        }
        if (!taken[best]) {
            take(best);
        }
    }
    while (chosen.size() < count) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!taken[i] && (best == n || min_angle[i] > min_angle[best])) {
                best = i;
            }
        }
        take(best);
    }
    return chosen;
}

auto select_tournament(ObjectiveMatrix const& pool, std::size_t count, std::mt19937_64& rng)
    -> std::vector<std::size_t> {
    if (pool.rows() < 2) {
        throw ContractViolation("select_tournament needs at least two solutions");
    }
    auto const front = front_indices(pool);
    auto const sde = sde_fitness(normalize(pool).values);

    std::uniform_int_distribution<std::size_t> pick(0, pool.rows() - 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::size_t> winners;
    winners.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        auto const a = pick(rng);
        auto const b = pick(rng);
        std::size_t winner = a;
        if (front[a] != front[b]) {
            winner = front[a] < front[b] ? a : b;
        } else if (sde[a] != sde[b]) {
            winner = sde[a] > sde[b] ? a : b;
        } else {
            winner = coin(rng) ? a : b;
        }
        winners.push_back(winner);
    }
    return winners;
}

auto Grid::grid_difference(std::size_t a, std::size_t b) const -> int {
    int gd = 0;
    for (std::size_t k = 0; k < coords[a].size(); ++k) {
        gd += std::abs(coords[a][k] - coords[b][k]);
    }
    return gd;
}

auto Grid::grid_dominates(std::size_t a, std::size_t b) const -> bool {
    bool strictly = false;
    for (std::size_t k = 0; k < coords[a].size(); ++k) {
        if (coords[a][k] > coords[b][k]) {
            return false;
        }
        strictly = strictly || coords[a][k] < coords[b][k];
    }
    return strictly;
}

auto build_grid(ObjectiveMatrix const& points, std::size_t divisions) -> Grid {
    if (divisions == 0) {
        throw ContractViolation("grid needs at least one division");
    }
    auto const n = points.rows();
    auto const m = points.cols();
    Grid g;
    g.divisions = divisions;
    g.lower.assign(m, 0.0);
    g.width.assign(m, 0.0);
    g.coords.assign(n, std::vector<int>(m, 0));
    g.rank.assign(n, 0.0);
    g.crowding.assign(n, 0.0);
    g.point_distance.assign(n, 0.0);

    auto const div = static_cast<double>(divisions);
    for (std::size_t k = 0; k < m; ++k) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            lo = std::min(lo, points(i, k));
            hi = std::max(hi, points(i, k));
        }
        if (n == 0) {
            continue;
        }
        double const margin = (hi - lo) / (2.0 * div);
        g.lower[k] = lo - margin;
        g.width[k] = (hi + margin - g.lower[k]) / div;
        if (!(g.width[k] > 0.0)) {
            g.width[k] = 0.0;
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            auto cell = static_cast<long>(std::floor((points(i, k) - g.lower[k]) / g.width[k]));
            g.coords[i][k] = static_cast<int>(std::clamp<long>(cell, 0, static_cast<long>(divisions) - 1));
        }
    }

    auto const mi = static_cast<int>(m);
    for (std::size_t i = 0; i < n; ++i) {
        double offset = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            g.rank[i] += g.coords[i][k];
            if (g.width[k] > 0.0) {
                double const rel = (points(i, k) - (g.lower[k] + g.coords[i][k] * g.width[k])) / g.width[k];
                offset += rel * rel;
            }
        }
        g.point_distance[i] = std::sqrt(offset);
        for (std::size_t j = 0; j < n; ++j) {
            auto const gd = g.grid_difference(i, j);
            if (j != i && gd < mi) {
                g.crowding[i] += mi - gd;
            }
        }
    }
    return g;
}

namespace {

// Penalizes the remaining members after `q` was picked.
void adjust_grid_rank(Grid const& g, std::vector<std::size_t> const& remaining, std::size_t q,
                      std::vector<double>& rank) {
    auto const m = static_cast<int>(g.lower.size());
    std::vector<double> punish(g.coords.size(), 0.0);

    for (auto p : remaining) {
        if (g.grid_difference(p, q) == 0) {
            rank[p] += m + 2;
        } else if (g.grid_dominates(q, p)) {
            rank[p] += m;
        }
    }
    for (auto p : remaining) {
        auto const gd = g.grid_difference(p, q);
        if (gd == 0 || gd >= m || g.grid_dominates(q, p)) {
            continue;
        }
        if (punish[p] < m - gd) {
            punish[p] = m - gd;
            for (auto r : remaining) {
                if (r != p && g.grid_dominates(p, r) && !g.grid_dominates(q, r) && g.grid_difference(r, q) != 0 &&
                    punish[r] < punish[p]) {
                    punish[r] = punish[p];
                }
            }
        }
    }
    for (auto p : remaining) {
        if (g.grid_difference(p, q) != 0 && !g.grid_dominates(q, p)) {
            rank[p] += punish[p];
        }
    }
}

} // namespace

auto select_grid(ObjectiveMatrix const& pool, std::size_t count, std::size_t divisions) -> std::vector<std::size_t> {
    require_count(pool, count, "select_grid");
    std::vector<std::size_t> chosen;
    chosen.reserve(count);
    if (count == 0) {
        return chosen;
    }
    auto const grid = build_grid(pool, divisions);
    auto const m = static_cast<int>(pool.cols());

    for (auto const& front : nondominated_fronts(pool)) {
        if (chosen.size() + front.size() <= count) {
            chosen.insert(chosen.end(), front.begin(), front.end());
            if (chosen.size() == count) {
                break;
            }
            continue;
        }

        std::vector<std::size_t> remaining = front;
        std::vector<double> rank = grid.rank;
        std::vector<double> crowding(pool.rows(), 0.0);
        while (chosen.size() < count) {
            auto best = remaining.begin();
            for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
                auto const key = std::tuple(rank[*it], crowding[*it], grid.point_distance[*it]);
                auto const best_key = std::tuple(rank[*best], crowding[*best], grid.point_distance[*best]);
                if (key < best_key) {
                    best = it;
                }
            }
            auto const q = *best;
            remaining.erase(best);
            chosen.push_back(q);
            for (auto p : remaining) {
                auto const gd = grid.grid_difference(p, q);
                if (gd < m) {
                    crowding[p] += m - gd;
                }
            }
            adjust_grid_rank(grid, remaining, q, rank);
        }
        break;
    }
    return chosen;
}

} // namespace emtedge::selection

#include "emtedge/selection/environment.hpp"

#include <algorithm>
#include <set>

#include "emtedge/errors.hpp"
#include "emtedge/selection/dominance.hpp"
#include "emtedge/selection/geometry.hpp"

namespace emtedge::selection {

auto front_sde_order(ObjectiveMatrix const& candidates) -> std::vector<std::size_t> {
    auto const normalized = normalize(candidates).values;
    std::vector<std::size_t> order;
    order.reserve(candidates.rows());
    for (auto front : nondominated_fronts(candidates)) {
        auto const sde = sde_fitness(normalized.subset(front));
        std::vector<std::size_t> pos(front.size());
        for (std::size_t i = 0; i < pos.size(); ++i) {
            pos[i] = i;
        }
        std::stable_sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) { return sde[a] > sde[b]; });
        for (auto p : pos) {
            order.push_back(front[p]);
        }
    }
    return order;
}

namespace {

auto objectives_of(std::vector<Individual> const& group) -> ObjectiveMatrix {
    ObjectiveMatrix m;
    for (auto const& ind : group) {
        m.append(ind.objectives);
    }
    return m;
}

auto same_solution(Individual const& a, Individual const& b) -> bool {
    return a.objectives == b.objectives && a.genome == b.genome;
}

} // namespace

auto environment_selection(std::span<Individual const> merged, std::size_t size, std::span<Task const> tasks,
                           Archives& archives, std::mt19937_64& rng, FreshIndividual const& fresh,
                           EnvironmentSettings const& settings) -> std::vector<Individual> {
    if (tasks.empty() || size % tasks.size() != 0) {
        throw ContractViolation("environment_selection: population size must split evenly across tasks");
    }
    auto const quota = size / tasks.size();
    std::vector<Individual> next;
    next.reserve(size);

    for (auto task : tasks) {
        std::vector<Individual> group;
        for (auto const& ind : merged) {
            if (ind.skill_factor == task) {
                group.push_back(ind);
            }
        }
        while (group.size() < std::max<std::size_t>(quota, 2)) {
            if (!fresh) {
                throw ContractViolation("environment_selection: task has too few members and no refill source");
            }
            group.push_back(fresh(task));
        }

        auto const objs = objectives_of(group);
        std::set<std::size_t> picked;
        for (auto i : select_vector_angle(objs, quota)) {
            picked.insert(i);
        }
        for (auto i : select_tournament(objs, quota, rng)) {
            picked.insert(i);
        }
        for (auto i : select_grid(objs, quota, settings.grid_divisions)) {
            picked.insert(i);
        }

        std::vector<Individual> candidates;
        candidates.reserve(picked.size() + archives[task_index(task)].size());
        for (auto i : picked) {
            candidates.push_back(group[i]);
        }
        auto& archive = archives[task_index(task)];
        archive.update(candidates);

        auto const pool_size = candidates.size();
        for (auto const& elite : archive.members()) {
            auto dup = std::any_of(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(pool_size),
                                   [&](Individual const& c) { return same_solution(c, elite); });
            if (!dup) {
                candidates.push_back(elite);
            }
        }

        auto const order = front_sde_order(objectives_of(candidates));
        for (std::size_t r = 0; r < quota; ++r) {
            next.push_back(candidates[order[r]]);
        }
    }
    return next;
}

} // namespace emtedge::selection

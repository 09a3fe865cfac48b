#include "emtedge/selection/dominance.hpp"

#include <algorithm>
#include <string>

#include "emtedge/errors.hpp"

namespace emtedge::selection {

auto dominates(std::span<double const> a, std::span<double const> b) -> bool {
    if (a.size() != b.size()) {
        throw ContractViolation("dominates: objective vectors of length " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    bool strictly_better = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) {
            return false;
        }
        if (a[k] < b[k]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

auto nondominated_fronts(ObjectiveMatrix const& points) -> std::vector<std::vector<std::size_t>> {
    auto const n = points.rows();
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> domination_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points.row(i), points.row(j))) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(points.row(j), points.row(i))) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current) {
            for (auto j : dominated_by[i]) {
                if (--domination_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

auto front_indices(ObjectiveMatrix const& points) -> std::vector<std::size_t> {
    std::vector<std::size_t> front_of(points.rows(), 0);
    auto const fronts = nondominated_fronts(points);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (auto i : fronts[f]) {
            front_of[i] = f;
        }
    }
    return front_of;
}

auto mutually_nondominated(ObjectiveMatrix const& points) -> bool {
    for (std::size_t i = 0; i < points.rows(); ++i) {
        for (std::size_t j = 0; j < points.rows(); ++j) {
            if (i != j && dominates(points.row(i), points.row(j))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace emtedge::selection

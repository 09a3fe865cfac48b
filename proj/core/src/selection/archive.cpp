#include "emtedge/selection/archive.hpp"

#include <algorithm>
#include <limits>

#include "emtedge/selection/dominance.hpp"
#include "emtedge/selection/geometry.hpp"

namespace emtedge::selection {

namespace {

auto same_row(ObjectiveMatrix const& m, std::size_t a, std::size_t b) -> bool {
    auto ra = m.row(a);
    auto rb = m.row(b);
    return std::equal(ra.begin(), ra.end(), rb.begin());
}

} // namespace

auto archive_survivors(ObjectiveMatrix const& merged, std::size_t capacity) -> std::vector<std::size_t> {
    auto const n = merged.rows();
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < n; ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < n && keep; ++j) {
            keep = !(j != i && dominates(merged.row(j), merged.row(i)));
        }
        for (auto k : alive) {
            if (!keep) {
                break;
            }
            keep = !same_row(merged, k, i);
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

    auto const points = normalize(merged.subset(alive)).values;
    auto const a = alive.size();
    auto const m = points.cols();

    std::vector<bool> exempt(a, false);
    std::size_t exempt_count = 0;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < a; ++i) {
            if (points(i, k) < points(best, k)) {
                best = i;
            }
        }
        if (!exempt[best]) {
            exempt[best] = true;
            ++exempt_count;
        }
    }
    if (exempt_count > capacity) {
        std::fill(exempt.begin(), exempt.end(), false);
    }

    // Shifted distances are fixed; only nearest neighbours change as rows go.
    std::vector<double> dist(a * a, 0.0);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < a; ++j) {
            dist[i * a + j] = shifted_distance(points.row(i), points.row(j));
        }
    }
    std::vector<bool> removed(a, false);
    std::vector<double> nearest(a);
    std::vector<std::size_t> nearest_of(a);
    auto refresh = [&](std::size_t i) {
        nearest[i] = std::numeric_limits<double>::infinity();
        nearest_of[i] = a;
        for (std::size_t j = 0; j < a; ++j) {
            if (j != i && !removed[j] && dist[i * a + j] < nearest[i]) {
                nearest[i] = dist[i * a + j];
                nearest_of[i] = j;
            }
        }
    };
    for (std::size_t i = 0; i < a; ++i) {
        refresh(i);
    }

    for (std::size_t remaining = a; remaining > capacity; --remaining) {
        std::size_t victim = a;
        for (std::size_t i = 0; i < a; ++i) {
            if (!removed[i] && !exempt[i] && (victim == a || nearest[i] < nearest[victim])) {
                victim = i;
            }
        }
        removed[victim] = true;
        for (std::size_t i = 0; i < a; ++i) {
            if (!removed[i] && nearest_of[i] == victim) {
                refresh(i);
            }
        }
    }

    std::vector<std::size_t> out;
    out.reserve(capacity);
    for (std::size_t i = 0; i < a; ++i) {
        if (!removed[i]) {
            out.push_back(alive[i]);
        }
    }
    return out;
}

auto Archive::objectives() const -> ObjectiveMatrix {
    ObjectiveMatrix m;
    for (auto const& member : members_) {
        m.append(member.objectives);
    }
    return m;
}

void Archive::update(std::span<Individual const> candidates) {
    std::vector<Individual const*> merged;
    merged.reserve(members_.size() + candidates.size());
    for (auto const& member : members_) {
        merged.push_back(&member);
    }
    for (auto const& c : candidates) {
        if (c.feasible) {
            merged.push_back(&c);
        }
    }
    ObjectiveMatrix objs;
    for (auto const* ind : merged) {
        objs.append(ind->objectives);
    }
    std::vector<Individual> next;
    for (auto i : archive_survivors(objs, capacity_)) {
        next.push_back(*merged[i]);
    }
    members_ = std::move(next);
}

} // namespace emtedge::selection

#ifndef EMTEDGE_SELECTION_ARCHIVE_HPP
#define EMTEDGE_SELECTION_ARCHIVE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "emtedge/individual.hpp"
#include "emtedge/selection/objective_matrix.hpp"

namespace emtedge::selection {

// Rows of `merged` that survive an archive update with the given capacity,
// ascending. Dominated rows and repeats of an identical row are dropped
// (the first copy stays). If more than `capacity` remain, the row with the
// smallest SDE value in normalized space is removed, SDE is recomputed, and
// so on until `capacity` are left. Rows holding a per-objective minimum are
// exempt from removal, which keeps each objective's best value monotone
// over successive updates.
[[nodiscard]] auto archive_survivors(ObjectiveMatrix const& merged, std::size_t capacity) -> std::vector<std::size_t>;

// Elite archive for one task: bounded, mutually non-dominated.
class Archive {
public:
    explicit Archive(std::size_t capacity = 0) : capacity_(capacity) {}

    // Merges feasible candidates into the archive. Existing members come
    // first in merge order, so they win ties against identical candidates.
    void update(std::span<Individual const> candidates);

    [[nodiscard]] auto members() const noexcept -> std::vector<Individual> const& { return members_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return members_.size(); }
    [[nodiscard]] auto capacity() const noexcept -> std::size_t { return capacity_; }
    [[nodiscard]] auto empty() const noexcept -> bool { return members_.empty(); }

    [[nodiscard]] auto objectives() const -> ObjectiveMatrix;

private:
    std::size_t capacity_;
    std::vector<Individual> members_;
};

} // namespace emtedge::selection

#endif // EMTEDGE_SELECTION_ARCHIVE_HPP

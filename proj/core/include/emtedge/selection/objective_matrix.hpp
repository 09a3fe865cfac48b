#ifndef EMTEDGE_SELECTION_OBJECTIVE_MATRIX_HPP
#define EMTEDGE_SELECTION_OBJECTIVE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "emtedge/objectives.hpp"

namespace emtedge::selection {

// Row-major objective values: one row per solution, one column per
// objective. Minimization orientation throughout.
class ObjectiveMatrix {
public:
    ObjectiveMatrix() = default;
    ObjectiveMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    ObjectiveMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static auto from_vectors(std::span<ObjectiveVector const> rows) -> ObjectiveMatrix;

    [[nodiscard]] auto rows() const noexcept -> std::size_t { return rows_; }
    [[nodiscard]] auto cols() const noexcept -> std::size_t { return cols_; }
    [[nodiscard]] auto empty() const noexcept -> bool { return rows_ == 0; }

    [[nodiscard]] auto row(std::size_t i) const -> std::span<double const> { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] auto row(std::size_t i) -> std::span<double> { return {data_.data() + i * cols_, cols_}; }

    [[nodiscard]] auto operator()(std::size_t i, std::size_t k) const -> double { return data_[i * cols_ + k]; }
    [[nodiscard]] auto operator()(std::size_t i, std::size_t k) -> double& { return data_[i * cols_ + k]; }

    // Rows picked by index, in the given order.
    [[nodiscard]] auto subset(std::span<std::size_t const> indices) const -> ObjectiveMatrix;

    void append(std::span<double const> values);

    friend auto operator==(ObjectiveMatrix const&, ObjectiveMatrix const&) -> bool = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

} // namespace emtedge::selection

#endif // EMTEDGE_SELECTION_OBJECTIVE_MATRIX_HPP

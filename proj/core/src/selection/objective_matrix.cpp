#include "emtedge/selection/objective_matrix.hpp"

#include "emtedge/errors.hpp"

namespace emtedge::selection {

ObjectiveMatrix::ObjectiveMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols, fill) {}

ObjectiveMatrix::ObjectiveMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    for (auto const& r : rows) {
        append(std::span<double const>(r.begin(), r.size()));
    }
}

auto ObjectiveMatrix::from_vectors(std::span<ObjectiveVector const> rows) -> ObjectiveMatrix {
    ObjectiveMatrix m;
    for (auto const& r : rows) {
        m.append(r);
    }
    return m;
}

auto ObjectiveMatrix::subset(std::span<std::size_t const> indices) const -> ObjectiveMatrix {
    ObjectiveMatrix m;
    m.cols_ = cols_;
    m.data_.reserve(indices.size() * cols_);
    for (auto i : indices) {
        auto r = row(i);
        m.data_.insert(m.data_.end(), r.begin(), r.end());
        ++m.rows_;
    }
    return m;
}

void ObjectiveMatrix::append(std::span<double const> values) {
    if (rows_ == 0 && data_.empty()) {
        cols_ = values.size();
    } else if (values.size() != cols_) {
        throw ContractViolation("objective row has " + std::to_string(values.size()) + " entries, matrix has " +
                                std::to_string(cols_) + " columns");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

} // namespace emtedge::selection

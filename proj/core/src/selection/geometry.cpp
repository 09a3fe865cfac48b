#include "emtedge/selection/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace emtedge::selection {

auto normalize(ObjectiveMatrix const& raw) -> NormalizedFront {
    auto const n = raw.rows();
    auto const m = raw.cols();
    NormalizedFront out{ObjectiveMatrix(n, m), std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
    for (std::size_t k = 0; k < m; ++k) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            lo = std::min(lo, raw(i, k));
            hi = std::max(hi, raw(i, k));
        }
        out.mins[k] = n == 0 ? 0.0 : lo;
        out.maxs[k] = n == 0 ? 0.0 : hi;
        double const span = hi - lo;
        for (std::size_t i = 0; i < n; ++i) {
            out.values(i, k) = span > 0.0 ? std::clamp((raw(i, k) - lo) / span, 0.0, 1.0) : 0.0;
        }
    }
    return out;
}

auto norm(std::span<double const> x) -> double {
    double sum = 0.0;
    for (double v : x) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

auto vector_angle(std::span<double const> x, std::span<double const> y) -> double {
    double const nx = norm(x);
    double const ny = norm(y);
    if (nx == 0.0 || ny == 0.0) {
        return std::numbers::pi / 2.0;
    }
    double dot = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        dot += x[k] * y[k];
    }
    return std::acos(std::clamp(std::abs(dot) / (nx * ny), 0.0, 1.0));
}

auto shifted_distance(std::span<double const> focal, std::span<double const> other) -> double {
    double sum = 0.0;
    for (std::size_t k = 0; k < focal.size(); ++k) {
        double const d = std::max(other[k] - focal[k], 0.0);
        sum += d * d;
    }
    return std::sqrt(sum);
}

auto sde_fitness(ObjectiveMatrix const& front) -> std::vector<double> {
    auto const n = front.rows();
    std::vector<double> out(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                out[i] = std::min(out[i], shifted_distance(front.row(i), front.row(j)));
            }
        }
    }
    return out;
}

} // namespace emtedge::selection

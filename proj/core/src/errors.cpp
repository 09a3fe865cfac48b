#include "emtedge/errors.hpp"

#include <numeric>
#include <utility>

namespace emtedge {

namespace {
auto join(std::vector<std::string> const& lines) -> std::string {
    if (lines.empty()) {
        return "validation failed";
    }
    return std::accumulate(std::next(lines.begin()), lines.end(), lines.front(),
                           [](std::string acc, std::string const& s) { return std::move(acc) + "; " + s; });
}
} // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join(violations))
    , violations_(std::move(violations)) {}

} // namespace emtedge

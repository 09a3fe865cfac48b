#ifndef EMTEDGE_ERRORS_HPP
#define EMTEDGE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace emtedge {

// Plan does not fit the instance (wrong length, index out of range).
class MalformedPlanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A deployment plan could not be made feasible by repair.
class InfeasibleInstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Carries every violated invariant, one human-readable line each.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);

    [[nodiscard]] auto violations() const noexcept -> std::vector<std::string> const& { return violations_; }

private:
    std::vector<std::string> violations_;
};

} // namespace emtedge

#endif // EMTEDGE_ERRORS_HPP

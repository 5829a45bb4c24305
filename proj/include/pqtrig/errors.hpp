#pragma once

#include <stdexcept>
#include <string>

namespace pqtrig {

/// An argument lies outside the domain of the requested operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its tolerance. Carries the best
/// value available when it gave up.
class ComputationError : public std::runtime_error {
public:
    ComputationError(const std::string& what, double partial, double error_estimate)
        : std::runtime_error(what), partial_(partial), error_estimate_(error_estimate) {}

    double partial() const noexcept { return partial_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double partial_;
    double error_estimate_;
};

}  // namespace pqtrig

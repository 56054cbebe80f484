#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace winding {

// Origin reached where a direction is needed (drift, reflection).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A proposed Euler step could not be mapped back into the domain.
// The integrator resamples the Gaussian increment and retries.
struct StepRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegratorFailure : std::runtime_error {
    IntegratorFailure(std::size_t index, const std::string& what)
        : std::runtime_error(what), trajectory_index(index) {}
    std::size_t trajectory_index;
};

// Requested time lies below the threshold where the law's logarithm is positive.
struct NormalizerUndefined : std::domain_error {
    using std::domain_error::domain_error;
};

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BracketNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invalid parameters or configuration; the CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace winding

// errors.hpp: exception types raised by the chiralpb core.
//
// Two families matter to callers: validation problems (bad dimensions, bad
// configuration, unsupported parameter combinations) and solver problems
// (singular blocks, degenerate steady states, empty modes). The CLI maps the
// first family to exit code 1 and the second to exit code 2.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chiralpb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- validation

class ValidationError : public Error {
public:
    using Error::Error;
};

class InvalidDimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidParameterError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidHamiltonianError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Closed-form expressions assume kappa_a == kappa_b and E_L == E_R.
class UnsupportedAsymmetryError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class StepSizeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
public:
    ConfigError(const std::string& message, std::size_t line);
    explicit ConfigError(const std::string& message);

    // 1-based line of the offending entry, 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_{0};
};

class IoError : public Error {
public:
    using Error::Error;
};

// ------------------------------------------------------------------- solver

class SolverError : public Error {
public:
    using Error::Error;
};

class NonUniqueSteadyStateError : public SolverError {
public:
    NonUniqueSteadyStateError(const std::string& message, std::size_t null_dimension);

    std::size_t null_dimension() const noexcept { return null_dimension_; }

private:
    std::size_t null_dimension_;
};

class EmptyModeError : public SolverError {
public:
    using SolverError::SolverError;
};

class ResonanceSingularityError : public SolverError {
public:
    ResonanceSingularityError(const std::string& message, std::string block);

    // "one-excitation" or "two-excitation"
    const std::string& block() const noexcept { return block_; }

private:
    std::string block_;
};

class SingularDenominatorError : public SolverError {
public:
    using SolverError::SolverError;
};

class UndefinedCorrelationError : public SolverError {
public:
    using SolverError::SolverError;
};

class NoOptimumError : public SolverError {
public:
    using SolverError::SolverError;
};

} // namespace chiralpb

#include "chiralpb/errors.hpp"

#include <utility>

namespace chiralpb {

ConfigError::ConfigError(const std::string& message, std::size_t line)
    : ValidationError("line " + std::to_string(line) + ": " + message), line_(line)
{
}

ConfigError::ConfigError(const std::string& message) : ValidationError(message) {}

NonUniqueSteadyStateError::NonUniqueSteadyStateError(const std::string& message,
                                                     std::size_t null_dimension)
    : SolverError(message + " (estimated null-space dimension " +
                  std::to_string(null_dimension) + ")"),
      null_dimension_(null_dimension)
{
}

ResonanceSingularityError::ResonanceSingularityError(const std::string& message,
                                                     std::string block)
    : SolverError(block + " block: " + message), block_(std::move(block))
{
}

} // namespace chiralpb

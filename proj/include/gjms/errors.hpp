#pragma once

#include <stdexcept>
#include <string>

namespace gjms {

// Numerical failure (solver non-convergence, positivity loss, decay violation).
// Precondition violations use std::invalid_argument / std::domain_error instead.
struct ComputationError : std::runtime_error {
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gjms

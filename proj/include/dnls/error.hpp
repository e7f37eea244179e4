#pragma once

#include <stdexcept>
#include <string>

namespace dnls {

/// Input outside the mathematical domain of an operation (bad grid, parameters
/// outside the soliton existence region, mismatched grids, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure did not deliver: non-convergence, blow-up of the
/// time integrator, bracket failure.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dnls

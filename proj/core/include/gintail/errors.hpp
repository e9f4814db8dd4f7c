#pragma once

#include <stdexcept>
#include <string>

namespace gintail {

// Thrown when a requested tolerance cannot be met within the configured
// term/step budget. Maps to exit code 3 in the CLI.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an input fails a precondition. Maps to exit code 2 in the CLI.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gintail

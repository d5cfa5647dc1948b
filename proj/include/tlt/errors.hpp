#pragma once

#include <stdexcept>
#include <string>

namespace tlt {

// Bad data or parameters supplied by the caller: malformed input files,
// p-values outside [0,1], inverted prior bounds, invalid scenarios.
// The CLI maps this (and std::domain_error) to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An iterative numeric routine failed to converge. Mapped to exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tlt

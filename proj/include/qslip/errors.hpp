#pragma once

#include <stdexcept>
#include <string>

namespace qslip {

/// Raised when an input violates a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qslip

#pragma once

#include <stdexcept>
#include <string>

namespace psmc {

// Precondition or construction-time validation failure (bad parameters,
// mismatched fields, violated scheme invariants, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive computation would exceed its configured evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// File / stream parsing and writing problems.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psmc

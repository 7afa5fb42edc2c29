#pragma once

#include <stdexcept>
#include <string>

namespace gwp1 {

/// Base class for failures of an exact or numeric computation.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient was requested outside the provably valid truncation window.
/// `suggested_order` is a truncation order that would make the request valid
/// (0 when no suggestion is available).
class TruncationError : public ComputationError {
 public:
  explicit TruncationError(const std::string& what, int suggested_order = 0)
      : ComputationError(what), suggested_order_(suggested_order) {}

  int suggested_order() const noexcept { return suggested_order_; }

 private:
  int suggested_order_;
};

/// A structural identity that must hold exactly was violated.
class ConsistencyError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace gwp1

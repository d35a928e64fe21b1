#pragma once

#include <stdexcept>

namespace wlog {

/// Malformed or out-of-contract input (unknown symbol, non-spanning tree, ...).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested computation is undefined for this input
/// (e.g. an exterior image of a word outside the commutator subgroup).
struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wlog

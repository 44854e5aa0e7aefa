#pragma once

#include <stdexcept>
#include <string>

namespace armlab {

// Structure failed an axiom check (the message names the axiom and the
// offending elements).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration exceeded its configured budget. Callers must treat this as
// "no answer", never as a partial answer.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace armlab

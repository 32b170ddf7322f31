#pragma once

#include <stdexcept>
#include <string>

namespace homm {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// H_X H_Z^T != 0: the two check matrices do not commute.
struct CommutationViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation requires at least one logical qubit.
struct KIsZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace homm

#pragma once

#include <stdexcept>
#include <string>

namespace mixnorm {

/// Thrown when a function sample would hit a kernel/function singularity
/// (e.g. log|x| at a cell whose center is exactly the origin).
struct singularity_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a weight fails strict positivity.
struct weight_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace mixnorm

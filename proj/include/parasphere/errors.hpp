#pragma once

#include <stdexcept>

namespace parasphere {

// Bad caller input: non-unit direction, out-of-range parameter, malformed file.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A runtime algebraic self-check failed; indicates a broken build, not bad input.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace parasphere

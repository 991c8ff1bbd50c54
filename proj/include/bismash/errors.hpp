// Exception types shared across the engine.

#pragma once

#include <stdexcept>
#include <string>

namespace bismash {

// Malformed textual input (cycle notation, group files, factorization specs).
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation was refused because it would exceed a configured cap
// (group enumeration size, character table size, oracle size, ...).
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// F and G do not factor the target group exactly; carries a witness.
struct NotExactError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation needed structure the inputs do not have
// (wrong domain, element outside the group, missing shape).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bismash

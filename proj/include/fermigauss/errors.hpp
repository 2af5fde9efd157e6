#pragma once

#include <stdexcept>
#include <string>

namespace fermigauss {

// Dimension or subsystem-layout mismatch between arguments.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a hard size cap (dense oracle dimension, pairing count).
struct CapError : std::invalid_argument {
  explicit CapError(const std::string& what) : std::invalid_argument(what) {}
};

// Input violates a mathematical precondition (non-unitary transform,
// state not maximally entangled, degenerate common kernel, mixed parity
// block where a pure one is required, ...).
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed JSON that does not match the expected schema.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fermigauss

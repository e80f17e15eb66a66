#pragma once

#include <stdexcept>
#include <string>

namespace sqcx {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or arity mismatch (matrix product, compose, input width).
struct DimensionError : Error {
  using Error::Error;
};

// Malformed textual input: rational strings, JSON scheme documents,
// CLI numbers. The message carries the location when one is known.
struct ParseError : Error {
  using Error::Error;
};

// A scheme failed validation where a valid one is required.
struct ValidationError : Error {
  using Error::Error;
};

// Unknown built-in scheme name.
struct UnknownSchemeError : Error {
  using Error::Error;
};

// Runtime evaluation failure, pinned to a wire. `stage` is the index of
// the stage that produced the wire, or -1 for a scheme input.
struct EvalError : Error {
  enum class Kind { ZeroDivide, Overflow, UnrepresentableInput };

  EvalError(Kind k, int stage_idx, int wire_idx, const std::string& msg)
      : Error(msg), kind(k), stage(stage_idx), wire(wire_idx) {}

  Kind kind;
  int stage;
  int wire;
};

} // namespace sqcx

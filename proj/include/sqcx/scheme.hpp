#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sqcx/matrix.hpp"

namespace sqcx {

/// Output vector = matrix * input vector.
struct LinearStage {
  RMatrix matrix;
};

/// Elementwise stage: each output wire is one op over a single input wire.
struct UnaryOp {
  enum class Kind { Copy, Square, Scale };

  Kind kind = Kind::Copy;
  int src = 0;
  Rational factor; // Scale only

  static UnaryOp copy(int src) { return {Kind::Copy, src, Rational(0)}; }
  static UnaryOp square(int src) { return {Kind::Square, src, Rational(0)}; }
  static UnaryOp scale(int src, Rational c) {
    return {Kind::Scale, src, std::move(c)};
  }

  friend bool operator==(const UnaryOp&, const UnaryOp&) = default;
};

struct UnaryStage {
  std::vector<UnaryOp> ops;

  friend bool operator==(const UnaryStage&, const UnaryStage&) = default;
};

/// Two-input stage: products, quotients and pass-throughs.
struct BinaryOp {
  enum class Kind { Copy, Mul, Div };

  Kind kind = Kind::Copy;
  int a = 0; // Copy src, Mul lhs, Div numerator
  int b = 0; // Mul rhs, Div denominator

  static BinaryOp copy(int src) { return {Kind::Copy, src, 0}; }
  static BinaryOp mul(int lhs, int rhs) { return {Kind::Mul, lhs, rhs}; }
  static BinaryOp div(int num, int den) { return {Kind::Div, num, den}; }

  friend bool operator==(const BinaryOp&, const BinaryOp&) = default;
};

struct BinaryStage {
  std::vector<BinaryOp> ops;

  friend bool operator==(const BinaryStage&, const BinaryStage&) = default;
};

using Stage = std::variant<LinearStage, UnaryStage, BinaryStage>;

bool operator==(const LinearStage& a, const LinearStage& b);
bool stage_eq(const Stage& a, const Stage& b);

int stage_output_width(const Stage& s);

/// A named pipeline of stages mapping an input wire vector to an output
/// wire vector. Immutable by convention once built.
struct Scheme {
  std::string name;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<Stage> stages;
  std::optional<std::string> known_erratum;

  friend bool operator==(const Scheme& a, const Scheme& b);
};

struct ValidationIssue {
  enum class Kind {
    DuplicateInput,
    EmptyStage,
    WidthMismatch,   // stage expects a different input width
    WireOutOfRange,  // an op references a wire >= stage input width
    OutputMismatch,  // final width != |output_labels|
  };

  Kind kind{};
  int stage = -1;   // stage index, or stages.size() for OutputMismatch
  int expected = 0; // width the stage (or output list) expects
  int actual = 0;   // width the chain actually delivers
  int wire = -1;    // offending wire index for WireOutOfRange

  std::string message() const;
};

/// Carries the first violation found, or nothing when the scheme is valid.
struct ValidationReport {
  std::optional<ValidationIssue> issue;

  bool ok() const { return !issue.has_value(); }
};

ValidationReport validate(const Scheme& s);

/// Throws ValidationError unless validate(s) is ok.
void require_valid(const Scheme& s);

/// Pipeline concatenation: evaluating the result equals evaluating
/// `second` on the outputs of `first`. Throws DimensionError when the
/// seam widths differ.
Scheme compose(const Scheme& first, const Scheme& second);

/// n-wide pass-through scheme (single identity Linear stage).
Scheme identity_scheme(int n);

} // namespace sqcx

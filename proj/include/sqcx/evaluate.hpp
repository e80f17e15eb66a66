#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sqcx/polynomial.hpp"
#include "sqcx/scheme.hpp"

namespace sqcx {

/// Runs the scheme over exact rationals. Throws EvalError(ZeroDivide)
/// with the stage and wire when a Div sees a zero denominator.
std::vector<Rational> eval_exact(const Scheme& s,
                                 std::span<const Rational> inputs);

/// Runs the scheme over rational functions of its input symbols; wire k
/// starts as the monomial input_labels[k]. Throws EvalError when a Div
/// denominator is identically zero.
std::vector<RationalFn> eval_symbolic(const Scheme& s);

/// Q-format fixed point: W total bits (two's-complement range, so wire
/// magnitudes must stay below 2^(W-1)), f fractional bits. Overflow is
/// always a hard error and Div truncates toward zero; these are the only
/// policies. Square/Mul rescales and non-dyadic coefficient scalings
/// also truncate toward zero when inexact.
struct FixedPointConfig {
  int word_bits = 32;
  int frac_bits = 0;
};

/// Per-wire peak magnitude in bits of the scaled integer, keyed by
/// (stage, wire); stage -1 holds the scheme inputs. Merging keeps the
/// per-wire maximum, so a sweep's report is independent of evaluation
/// order.
struct WidthReport {
  std::map<std::pair<int, int>, int> max_bits;

  void record(int stage, int wire, int bits);
  void merge(const WidthReport& o);
};

struct FixedResult {
  std::vector<Rational> outputs;
  WidthReport widths;
};

/// Fixed-point run. Inputs must be exactly representable in the format
/// (input * 2^f integral and within range), else
/// EvalError(UnrepresentableInput). Any wire exceeding the word width
/// raises EvalError(Overflow) naming the wire.
FixedResult eval_fixed(const Scheme& s, const FixedPointConfig& cfg,
                       std::span<const Rational> inputs);

} // namespace sqcx

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqcx/complex_ref.hpp"
#include "sqcx/evaluate.hpp"
#include "sqcx/scheme.hpp"

namespace sqcx {

enum class ReferenceKind { ComplexSquare, ComplexMul, ComplexDiv, ScalarProduct };

ReferenceKind reference_from_name(const std::string& name); // square|mul|div|product
std::string reference_name(ReferenceKind k);

/// Canonical argument names of a reference function, e.g. a1,b1,a2,b2
/// for multiplication and division.
const std::vector<std::string>& reference_arguments(ReferenceKind k);
int reference_output_arity(ReferenceKind k);

/// A reference function together with the binding of scheme inputs to
/// its arguments: binding[i] is the scheme input index carrying
/// argument i. Bindings exist because different schemes order the same
/// four inputs differently (e.g. [a1,b1,a2,b2] vs [a1,a2,b1,b2]).
struct ReferenceId {
  ReferenceKind kind{};
  std::vector<int> binding;
};

/// Binds by input-label match when the scheme's labels are exactly the
/// reference's argument names (in any order), positionally when only
/// the arity matches; throws DimensionError otherwise.
ReferenceId bind_reference(ReferenceKind kind, const Scheme& s);

/// Reference outputs as rational functions of the scheme's input symbols.
std::vector<RationalFn> reference_symbolic(const ReferenceId& ref,
                                           std::size_t nvars);

/// Reference outputs at a concrete input point (in scheme input order).
/// Throws Error on a zero divisor.
std::vector<Rational> reference_exact(const ReferenceId& ref,
                                      std::span<const Rational> inputs);

struct Counterexample {
  std::vector<Rational> inputs;
  std::vector<Rational> scheme_value;
  std::vector<Rational> reference_value;
};

struct VerifyResult {
  bool pass = false;

  /// Symbolic mode: per-output difference scheme - reference, reported
  /// as (difference of numerators, common denominator) when the two
  /// denominators are proportional, cross-multiplied otherwise. Pass
  /// iff every residual numerator is identically zero.
  std::vector<RationalFn> residuals;

  /// Exhaustive mode bookkeeping.
  long long points_tested = 0;
  long long points_skipped = 0;
  long long mismatches = 0;
  std::optional<Counterexample> counterexample;
};

/// Polynomial-identity proof that the scheme computes the reference.
VerifyResult verify_symbolic(const Scheme& s, const ReferenceId& ref);

/// Independent grid oracle: compares eval_exact against the reference
/// on every integer point of [-R..R]^n. Points where either side hits a
/// zero divisor are skipped and counted. The whole grid is always
/// scanned; the counterexample is the lexicographically lowest mismatch.
VerifyResult verify_exhaustive(const Scheme& s, const ReferenceId& ref,
                               int radius);

} // namespace sqcx

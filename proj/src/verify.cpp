#include "sqcx/verify.hpp"

#include <algorithm>

namespace sqcx {

ReferenceKind reference_from_name(const std::string& name) {
  if (name == "square") return ReferenceKind::ComplexSquare;
  if (name == "mul") return ReferenceKind::ComplexMul;
  if (name == "div") return ReferenceKind::ComplexDiv;
  if (name == "product") return ReferenceKind::ScalarProduct;
  throw ParseError("unknown reference \"" + name +
                   "\" (expected square, mul, div or product)");
}

std::string reference_name(ReferenceKind k) {
  switch (k) {
    case ReferenceKind::ComplexSquare: return "square";
    case ReferenceKind::ComplexMul: return "mul";
    case ReferenceKind::ComplexDiv: return "div";
    case ReferenceKind::ScalarProduct: return "product";
  }
  return "?";
}

const std::vector<std::string>& reference_arguments(ReferenceKind k) {
  static const std::vector<std::string> square_args = {"a1", "b1"};
  static const std::vector<std::string> four_args = {"a1", "b1", "a2", "b2"};
  static const std::vector<std::string> product_args = {"a", "b"};
  switch (k) {
    case ReferenceKind::ComplexSquare: return square_args;
    case ReferenceKind::ComplexMul:
    case ReferenceKind::ComplexDiv: return four_args;
    case ReferenceKind::ScalarProduct: return product_args;
  }
  return product_args;
}

int reference_output_arity(ReferenceKind k) {
  return k == ReferenceKind::ScalarProduct ? 1 : 2;
}

ReferenceId bind_reference(ReferenceKind kind, const Scheme& s) {
  const auto& args = reference_arguments(kind);
  if (s.input_labels.size() != args.size())
    throw DimensionError("scheme \"" + s.name + "\" has " +
                         std::to_string(s.input_labels.size()) +
                         " inputs; reference " + reference_name(kind) +
                         " takes " + std::to_string(args.size()));

  ReferenceId ref{kind, {}};
  // Prefer a name match so e.g. inputs ordered [a1,a2,b1,b2] still bind
  // a2 to the divisor's real part.
  std::vector<int> by_name;
  bool named = true;
  for (const auto& arg : args) {
    auto it = std::find(s.input_labels.begin(), s.input_labels.end(), arg);
    if (it == s.input_labels.end()) {
      named = false;
      break;
    }
    by_name.push_back(static_cast<int>(it - s.input_labels.begin()));
  }
  if (named) {
    ref.binding = std::move(by_name);
  } else {
    for (std::size_t i = 0; i < args.size(); ++i)
      ref.binding.push_back(static_cast<int>(i));
  }
  return ref;
}

std::vector<RationalFn> reference_symbolic(const ReferenceId& ref,
                                           std::size_t nvars) {
  auto arg = [&](int i) {
    return Polynomial::variable(nvars, static_cast<std::size_t>(ref.binding[i]));
  };
  switch (ref.kind) {
    case ReferenceKind::ComplexSquare: {
      Polynomial a = arg(0), b = arg(1);
      return {RationalFn(a * a - b * b),
              RationalFn((a * b).scaled(Rational(2)))};
    }
    case ReferenceKind::ComplexMul: {
      Polynomial a1 = arg(0), b1 = arg(1), a2 = arg(2), b2 = arg(3);
      return {RationalFn(a1 * a2 - b1 * b2), RationalFn(a1 * b2 + b1 * a2)};
    }
    case ReferenceKind::ComplexDiv: {
      Polynomial a1 = arg(0), b1 = arg(1), a2 = arg(2), b2 = arg(3);
      Polynomial den = a2 * a2 + b2 * b2;
      return {RationalFn(a1 * a2 + b1 * b2, den),
              RationalFn(a2 * b1 - a1 * b2, den)};
    }
    case ReferenceKind::ScalarProduct: {
      return {RationalFn(arg(0) * arg(1))};
    }
  }
  throw Error("unhandled reference kind");
}

std::vector<Rational> reference_exact(const ReferenceId& ref,
                                      std::span<const Rational> inputs) {
  auto arg = [&](int i) { return inputs[ref.binding[i]]; };
  switch (ref.kind) {
    case ReferenceKind::ComplexSquare: {
      ComplexPair r = complex_square({arg(0), arg(1)});
      return {r.re, r.im};
    }
    case ReferenceKind::ComplexMul: {
      ComplexPair r = complex_mul({arg(0), arg(1)}, {arg(2), arg(3)});
      return {r.re, r.im};
    }
    case ReferenceKind::ComplexDiv: {
      ComplexPair r = complex_div({arg(0), arg(1)}, {arg(2), arg(3)});
      return {r.re, r.im};
    }
    case ReferenceKind::ScalarProduct:
      return {arg(0) * arg(1)};
  }
  throw Error("unhandled reference kind");
}

namespace {

/// scheme p/q minus reference r/t. With q = c*t the difference
/// (p - c*r, q) keeps the scheme's own denominator, which reads far
/// better in reports; otherwise fall back to (p*t - r*q, q*t).
RationalFn residual(const RationalFn& scheme_out, const RationalFn& ref_out) {
  if (auto c = constant_ratio(scheme_out.den(), ref_out.den()))
    return RationalFn(scheme_out.num() - ref_out.num().scaled(*c),
                      scheme_out.den());
  return RationalFn(
      scheme_out.num() * ref_out.den() - ref_out.num() * scheme_out.den(),
      scheme_out.den() * ref_out.den());
}

} // namespace

VerifyResult verify_symbolic(const Scheme& s, const ReferenceId& ref) {
  const int out_arity = reference_output_arity(ref.kind);
  if (static_cast<int>(s.output_labels.size()) != out_arity)
    throw DimensionError("scheme \"" + s.name + "\" has " +
                         std::to_string(s.output_labels.size()) +
                         " outputs; reference " + reference_name(ref.kind) +
                         " has " + std::to_string(out_arity));

  auto scheme_fns = eval_symbolic(s);
  auto ref_fns = reference_symbolic(ref, s.input_labels.size());

  VerifyResult result;
  result.pass = true;
  for (std::size_t k = 0; k < scheme_fns.size(); ++k) {
    RationalFn diff = residual(scheme_fns[k], ref_fns[k]);
    if (!diff.num().is_zero()) result.pass = false;
    result.residuals.push_back(std::move(diff));
  }
  return result;
}

VerifyResult verify_exhaustive(const Scheme& s, const ReferenceId& ref,
                               int radius) {
  if (radius < 1) throw Error("exhaustive radius must be >= 1");
  const int out_arity = reference_output_arity(ref.kind);
  if (static_cast<int>(s.output_labels.size()) != out_arity)
    throw DimensionError("scheme \"" + s.name + "\" has " +
                         std::to_string(s.output_labels.size()) +
                         " outputs; reference " + reference_name(ref.kind) +
                         " has " + std::to_string(out_arity));
  require_valid(s);

  const std::size_t n = s.input_labels.size();
  std::vector<int> point(n, -radius);
  std::vector<Rational> inputs(n);

  VerifyResult result;
  result.pass = true;

  bool done = false;
  while (!done) {
    for (std::size_t i = 0; i < n; ++i) inputs[i] = Rational(point[i]);

    bool skipped = false;
    std::vector<Rational> expect, got;
    try {
      expect = reference_exact(ref, inputs);
      got = eval_exact(s, inputs);
    } catch (const EvalError&) {
      skipped = true; // scheme-side zero divisor
    } catch (const Error&) {
      skipped = true; // reference-side zero divisor
    }

    if (skipped) {
      ++result.points_skipped;
    } else {
      ++result.points_tested;
      if (got != expect) {
        result.pass = false;
        ++result.mismatches;
        if (!result.counterexample)
          result.counterexample = Counterexample{inputs, got, expect};
      }
    }

    // Odometer, last coordinate fastest: visits points in ascending
    // lexicographic order.
    done = true;
    for (std::size_t i = n; i-- > 0;) {
      if (point[i] < radius) {
        ++point[i];
        std::fill(point.begin() + static_cast<long>(i) + 1, point.end(),
                  -radius);
        done = false;
        break;
      }
    }
  }
  return result;
}

} // namespace sqcx

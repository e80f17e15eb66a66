#include <doctest.h>

#include "sqcx/library.hpp"
#include "sqcx/verify.hpp"

using namespace sqcx;

namespace {

ReferenceId bound(const char* scheme, ReferenceKind kind) {
  return bind_reference(kind, builtin(scheme).scheme);
}

} // namespace

TEST_CASE("multiplication scheme proves out symbolically") {
  auto result = verify_symbolic(builtin("mul_eq7").scheme,
                                bound("mul_eq7", ReferenceKind::ComplexMul));
  CHECK(result.pass);
  for (const auto& r : result.residuals) CHECK(r.num().is_zero());
}

TEST_CASE("printed squaring scheme fails with residual 2*b1^2") {
  auto result =
      verify_symbolic(builtin("square_eq6_as_printed").scheme,
                      bound("square_eq6_as_printed", ReferenceKind::ComplexSquare));
  CHECK(!result.pass);
  REQUIRE(result.residuals.size() == 2);

  Polynomial b1 = Polynomial::variable(2, 1);
  CHECK(result.residuals[0].num() == (b1 * b1).scaled(Rational(2)));
  CHECK(result.residuals[0].den() == Polynomial::constant(2, Rational(1)));
  CHECK(result.residuals[1].num().is_zero());
}

TEST_CASE("printed division scheme fails with the documented residual") {
  auto result =
      verify_symbolic(builtin("div_eq8_as_printed").scheme,
                      bound("div_eq8_as_printed", ReferenceKind::ComplexDiv));
  CHECK(!result.pass);
  REQUIRE(result.residuals.size() == 2);

  // inputs [a1, a2, b1, b2]
  Polynomial a1 = Polynomial::variable(4, 0);
  Polynomial a2 = Polynomial::variable(4, 1);
  Polynomial b2 = Polynomial::variable(4, 3);

  CHECK(result.residuals[0].num().is_zero());
  CHECK(result.residuals[1].num() ==
        (a1 * a1 + b2 * b2).scaled(Rational(-2)));
  CHECK(result.residuals[1].den() ==
        (a2 * a2 + b2 * b2).scaled(Rational(2)));
}

TEST_CASE("corrected schemes prove out") {
  for (const char* name :
       {"square_logan_corrected", "div_logan_corrected", "div_via_conjugate_mul"}) {
    const auto& entry = builtin(name);
    CHECK(verify_symbolic(entry.scheme, bind_reference(entry.reference,
                                                       entry.scheme))
              .pass);
  }
}

TEST_CASE("binding follows input labels, not positions") {
  // div_eq8's order is [a1, a2, b1, b2]; binding must map b1 to index 2.
  auto ref = bound("div_eq8_as_printed", ReferenceKind::ComplexDiv);
  CHECK(ref.binding == std::vector<int>{0, 2, 1, 3});

  auto ref7 = bound("mul_eq7", ReferenceKind::ComplexMul);
  CHECK(ref7.binding == std::vector<int>{0, 1, 2, 3});

  // unlabeled schemes fall back to positional binding
  auto id_ref = bind_reference(ReferenceKind::ComplexSquare, identity_scheme(2));
  CHECK(id_ref.binding == std::vector<int>{0, 1});

  CHECK_THROWS_AS(bind_reference(ReferenceKind::ComplexMul, identity_scheme(3)),
                  DimensionError);
}

TEST_CASE("arity mismatch between scheme outputs and reference") {
  // scalar product reference expects 1 output; identity_scheme(2) has 2
  auto ref = bind_reference(ReferenceKind::ScalarProduct, identity_scheme(2));
  CHECK_THROWS_AS(verify_symbolic(identity_scheme(2), ref), DimensionError);
}

TEST_CASE("exhaustive grid on the multiplication scheme") {
  auto result = verify_exhaustive(builtin("mul_eq7").scheme,
                                  bound("mul_eq7", ReferenceKind::ComplexMul), 4);
  CHECK(result.pass);
  CHECK(result.points_tested == 6561);
  CHECK(result.points_skipped == 0);
  CHECK(!result.counterexample.has_value());
}

TEST_CASE("exhaustive grid skips exactly the zero-divisor plane") {
  auto result =
      verify_exhaustive(builtin("div_logan_corrected").scheme,
                        bound("div_logan_corrected", ReferenceKind::ComplexDiv), 4);
  CHECK(result.pass);
  CHECK(result.points_tested == 6480);
  CHECK(result.points_skipped == 81); // a2 = b2 = 0 leaves 9*9 points
  CHECK(result.points_tested + result.points_skipped == 6561);
}

TEST_CASE("exhaustive counterexample is the lexicographically lowest") {
  auto result =
      verify_exhaustive(builtin("square_eq6_as_printed").scheme,
                        bound("square_eq6_as_printed", ReferenceKind::ComplexSquare),
                        1);
  CHECK(!result.pass);
  REQUIRE(result.counterexample.has_value());
  const auto& ce = *result.counterexample;
  CHECK(ce.inputs == std::vector<Rational>{Rational(-1), Rational(-1)});
  CHECK(ce.scheme_value == std::vector<Rational>{Rational(2), Rational(2)});
  CHECK(ce.reference_value == std::vector<Rational>{Rational(0), Rational(2)});
  // mismatches happen exactly where b1 != 0
  CHECK(result.mismatches == 6);
  CHECK(result.points_tested + result.points_skipped == 9);
}

TEST_CASE("hand check of a single failing point") {
  // input (0, 1): printed scheme gives (1, 0), the square is (-1, 0)
  auto out = eval_exact(builtin("square_eq6_as_printed").scheme,
                        {{Rational(0), Rational(1)}});
  CHECK(out == std::vector<Rational>{Rational(1), Rational(0)});
  auto ref = reference_exact(
      bound("square_eq6_as_printed", ReferenceKind::ComplexSquare),
      {{Rational(0), Rational(1)}});
  CHECK(ref == std::vector<Rational>{Rational(-1), Rational(0)});
}

TEST_CASE("symbolic pass implies exhaustive pass for every built-in") {
  for (const auto& name : list_builtins()) {
    const auto& entry = builtin(name);
    auto ref = bind_reference(entry.reference, entry.scheme);
    auto symbolic = verify_symbolic(entry.scheme, ref);
    auto grid = verify_exhaustive(entry.scheme, ref, 3);
    CHECK(symbolic.pass == entry.expect_pass);
    CHECK(grid.pass == entry.expect_pass);
    if (symbolic.pass) CHECK(grid.pass);

    long long n = static_cast<long long>(entry.scheme.input_labels.size());
    long long total = 1;
    for (long long i = 0; i < n; ++i) total *= 7;
    CHECK(grid.points_tested + grid.points_skipped == total);
  }
}

TEST_CASE("failing residuals evaluate to the actual pointwise difference") {
  for (const char* name : {"square_eq6_as_printed", "div_eq8_as_printed"}) {
    const auto& entry = builtin(name);
    auto ref = bind_reference(entry.reference, entry.scheme);
    auto symbolic = verify_symbolic(entry.scheme, ref);
    REQUIRE(!symbolic.pass);

    std::vector<std::vector<Rational>> points = {
        {Rational(2), Rational(1)},
        {Rational(-3), Rational(5)},
        {Rational(2), Rational(1), Rational(-3), Rational(5)},
        {Rational(0), Rational(7), Rational(1), Rational(-2)}};
    for (const auto& point : points) {
      if (point.size() != entry.scheme.input_labels.size()) continue;
      auto scheme_val = eval_exact(entry.scheme, point);
      auto ref_val = reference_exact(ref, point);
      for (std::size_t k = 0; k < scheme_val.size(); ++k)
        CHECK(symbolic.residuals[k].eval(point) == scheme_val[k] - ref_val[k]);
    }
  }
}

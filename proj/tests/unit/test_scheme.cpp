#include <doctest.h>

#include "sqcx/evaluate.hpp"
#include "sqcx/library.hpp"
#include "sqcx/scheme.hpp"

using namespace sqcx;

TEST_CASE("built-in multiplication scheme validates with the right widths") {
  const Scheme& s = builtin("mul_eq7").scheme;
  CHECK(validate(s).ok());
  REQUIRE(s.stages.size() == 6);
  // 4 -> 6 -> 6 -> 6 -> 3 -> 2 -> 2
  std::vector<int> widths;
  for (const auto& st : s.stages) widths.push_back(stage_output_width(st));
  CHECK(widths == std::vector<int>{6, 6, 6, 3, 2, 2});
}

TEST_CASE("width chain violation is reported at the offending stage") {
  Scheme s;
  s.name = "bad";
  s.input_labels = {"x", "y"};
  s.output_labels = {"u", "v"};
  s.stages.push_back(LinearStage{mat({{1, 0}, {0, 1}, {1, 1}})}); // 3x2
  s.stages.push_back(LinearStage{mat({{1, 0}, {0, 1}})});         // wants 2
  auto report = validate(s);
  REQUIRE(!report.ok());
  CHECK(report.issue->kind == ValidationIssue::Kind::WidthMismatch);
  CHECK(report.issue->stage == 1);
  CHECK(report.issue->expected == 2);
  CHECK(report.issue->actual == 3);
}

TEST_CASE("out-of-range wire index is caught") {
  Scheme s;
  s.name = "bad_wire";
  s.input_labels = {"x", "y", "z"};
  s.output_labels = {"u"};
  s.stages.push_back(UnaryStage{{UnaryOp::square(5)}});
  auto report = validate(s);
  REQUIRE(!report.ok());
  CHECK(report.issue->kind == ValidationIssue::Kind::WireOutOfRange);
  CHECK(report.issue->stage == 0);
  CHECK(report.issue->wire == 5);
}

TEST_CASE("duplicate input labels and output arity are caught") {
  Scheme dup;
  dup.name = "dup";
  dup.input_labels = {"x", "x"};
  dup.output_labels = {"y", "z"};
  dup.stages.push_back(LinearStage{identity(2)});
  CHECK(validate(dup).issue->kind == ValidationIssue::Kind::DuplicateInput);

  Scheme off = identity_scheme(2);
  off.output_labels.push_back("extra");
  auto report = validate(off);
  REQUIRE(!report.ok());
  CHECK(report.issue->kind == ValidationIssue::Kind::OutputMismatch);
}

TEST_CASE("binary divisor index is range checked") {
  Scheme s;
  s.name = "bad_div";
  s.input_labels = {"x", "y"};
  s.output_labels = {"q"};
  s.stages.push_back(BinaryStage{{BinaryOp::div(0, 9)}});
  auto report = validate(s);
  REQUIRE(!report.ok());
  CHECK(report.issue->kind == ValidationIssue::Kind::WireOutOfRange);
  CHECK(report.issue->wire == 9);
}

TEST_CASE("compose concatenates pipelines") {
  const Scheme& square = builtin("square_eq6_as_printed").scheme;
  Scheme pre = compose(identity_scheme(2), square);
  CHECK(validate(pre).ok());
  Scheme post = compose(builtin("mul_eq7").scheme, identity_scheme(2));
  CHECK(validate(post).ok());

  std::vector<Rational> point = {Rational(3), Rational(-2)};
  CHECK(eval_exact(pre, point) == eval_exact(square, point));
  std::vector<Rational> point4 = {Rational(1), Rational(2), Rational(3),
                                  Rational(4)};
  CHECK(eval_exact(post, point4) ==
        eval_exact(builtin("mul_eq7").scheme, point4));

  // erratum note survives composition
  CHECK(pre.known_erratum == square.known_erratum);
}

TEST_CASE("compose rejects seam width mismatch") {
  CHECK_THROWS_AS(compose(builtin("square_direct").scheme, identity_scheme(3)),
                  DimensionError);
}

TEST_CASE("compose is associative up to stage concatenation") {
  Scheme a = identity_scheme(2);
  const Scheme& b = builtin("square_logan_corrected").scheme;
  Scheme c = identity_scheme(2);
  Scheme left = compose(compose(a, b), c);
  Scheme right = compose(a, compose(b, c));
  REQUIRE(left.stages.size() == right.stages.size());
  for (std::size_t i = 0; i < left.stages.size(); ++i)
    CHECK(stage_eq(left.stages[i], right.stages[i]));
}

TEST_CASE("scheme equality is structural") {
  Scheme a = builtin("scalar_logan").scheme;
  Scheme b = builtin("scalar_logan").scheme;
  CHECK(a == b);
  std::get<UnaryStage>(b.stages[3]).ops[0].factor = Rational(1, 4);
  CHECK(!(a == b));
}

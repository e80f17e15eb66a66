#include <doctest.h>

#include "sqcx/cost.hpp"
#include "sqcx/evaluate.hpp"
#include "sqcx/library.hpp"
#include "sqcx/verify.hpp"

using namespace sqcx;

TEST_CASE("catalog lists twelve schemes in a stable order") {
  const auto& names = list_builtins();
  CHECK(names.size() == 12);
  CHECK(names.front() == "square_direct");
  CHECK(names.back() == "scalar_quarter_square");
  CHECK_THROWS_AS(builtin("no_such_scheme"), UnknownSchemeError);
  CHECK(is_builtin("mul_gauss"));
  CHECK(!is_builtin("mul_gauss2"));
}

TEST_CASE("every built-in validates") {
  for (const auto& name : list_builtins())
    CHECK(validate(builtin(name).scheme).ok());
}

TEST_CASE("expected verdicts hold in both verification modes") {
  for (const auto& name : list_builtins()) {
    const auto& entry = builtin(name);
    auto ref = bind_reference(entry.reference, entry.scheme);
    CHECK(verify_symbolic(entry.scheme, ref).pass == entry.expect_pass);
    CHECK(verify_exhaustive(entry.scheme, ref, 4).pass == entry.expect_pass);
  }
}

TEST_CASE("as-printed schemes carry erratum notes, the rest do not") {
  for (const auto& name : list_builtins()) {
    const auto& entry = builtin(name);
    bool as_printed = name.find("as_printed") != std::string::npos;
    CHECK(entry.scheme.known_erratum.has_value() == as_printed);
    CHECK(entry.expect_pass == !as_printed);
  }
}

TEST_CASE("published costs embedded in the catalog match the audit") {
  int with_column = 0;
  for (const auto& name : list_builtins()) {
    const auto& entry = builtin(name);
    if (!entry.published_cost) continue;
    ++with_column;
    CostReport r = audit(entry.scheme);
    CHECK(r.adders == (*entry.published_cost)[0]);
    CHECK(r.squarers == (*entry.published_cost)[1]);
    CHECK(r.multipliers == (*entry.published_cost)[2]);
    CHECK(r.dividers == (*entry.published_cost)[3]);
  }
  CHECK(with_column == 6);
}

TEST_CASE("all passing multiplication schemes agree pointwise") {
  std::vector<std::string> muls = {"mul_direct", "mul_gauss", "mul_eq7"};
  for (int a1 = -4; a1 <= 4; ++a1)
    for (int b1 = -4; b1 <= 4; ++b1)
      for (int a2 = -4; a2 <= 4; ++a2)
        for (int b2 = -4; b2 <= 4; ++b2) {
          std::vector<Rational> point = {Rational(a1), Rational(b1),
                                         Rational(a2), Rational(b2)};
          auto first = eval_exact(builtin(muls[0]).scheme, point);
          for (std::size_t i = 1; i < muls.size(); ++i)
            CHECK(eval_exact(builtin(muls[i]).scheme, point) == first);
        }
}

TEST_CASE("all passing division schemes agree pointwise off the zero plane") {
  for (int a1 = -4; a1 <= 4; ++a1)
    for (int b1 = -4; b1 <= 4; ++b1)
      for (int a2 = -4; a2 <= 4; ++a2)
        for (int b2 = -4; b2 <= 4; ++b2) {
          if (a2 == 0 && b2 == 0) continue;
          // div_direct and div_via_conjugate_mul take [a1, b1, a2, b2]
          std::vector<Rational> standard = {Rational(a1), Rational(b1),
                                            Rational(a2), Rational(b2)};
          // div_logan_corrected takes [a1, a2, b1, b2]
          std::vector<Rational> swapped = {Rational(a1), Rational(a2),
                                           Rational(b1), Rational(b2)};
          auto expect = eval_exact(builtin("div_direct").scheme, standard);
          CHECK(eval_exact(builtin("div_via_conjugate_mul").scheme, standard) ==
                expect);
          CHECK(eval_exact(builtin("div_logan_corrected").scheme, swapped) ==
                expect);
        }
}

TEST_CASE("squaring schemes match squaring by multiplication") {
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      std::vector<Rational> point = {Rational(a), Rational(b)};
      auto direct = eval_exact(builtin("square_direct").scheme, point);
      CHECK(eval_exact(builtin("square_logan_corrected").scheme, point) ==
            direct);
    }
}

TEST_CASE("scalar schemes compute the plain product") {
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      std::vector<Rational> point = {Rational(a), Rational(b)};
      std::vector<Rational> expect = {Rational(a) * Rational(b)};
      CHECK(eval_exact(builtin("scalar_logan").scheme, point) == expect);
      CHECK(eval_exact(builtin("scalar_quarter_square").scheme, point) ==
            expect);
    }
}

#include <doctest.h>

#include <random>

#include "sqcx/complex_ref.hpp"

using sqcx::ComplexPair;
using sqcx::Int;
using sqcx::Rational;

TEST_CASE("complex square") {
  CHECK(sqcx::complex_square({Rational(1), Rational(0)}) ==
        ComplexPair{Rational(1), Rational(0)});
  CHECK(sqcx::complex_square({Rational(0), Rational(1)}) ==
        ComplexPair{Rational(-1), Rational(0)});
  // (3 + 2j)^2 = 9 - 4 + 12j
  CHECK(sqcx::complex_square({Rational(3), Rational(2)}) ==
        ComplexPair{Rational(5), Rational(12)});
}

TEST_CASE("complex multiplication") {
  ComplexPair x{Rational(7), Rational(-3)};
  CHECK(sqcx::complex_mul({Rational(1), Rational(0)}, x) == x);
  CHECK(sqcx::complex_mul({Rational(0), Rational(1)},
                          {Rational(0), Rational(1)}) ==
        ComplexPair{Rational(-1), Rational(0)});
  CHECK(sqcx::complex_mul({Rational(1), Rational(2)},
                          {Rational(3), Rational(4)}) ==
        ComplexPair{Rational(-5), Rational(10)});
}

TEST_CASE("three-multiplication product: value and operation count") {
  sqcx::OpCount count;
  CHECK(sqcx::complex_mul_gauss({Rational(1), Rational(2)},
                                {Rational(3), Rational(4)}, &count) ==
        ComplexPair{Rational(-5), Rational(10)});
  CHECK(count.mults == 3);
  CHECK(count.adds == 5);

  CHECK(sqcx::complex_mul_gauss({Rational(1), Rational(0)},
                                {Rational(5), Rational(-6)}) ==
        ComplexPair{Rational(5), Rational(-6)});
  CHECK(sqcx::complex_mul_gauss({Rational(0), Rational(0)},
                                {Rational(5), Rational(-6)}) ==
        ComplexPair{Rational(0), Rational(0)});
}

TEST_CASE("three-multiplication product agrees with direct on the whole grid") {
  for (int a1 = -4; a1 <= 4; ++a1)
    for (int b1 = -4; b1 <= 4; ++b1)
      for (int a2 = -4; a2 <= 4; ++a2)
        for (int b2 = -4; b2 <= 4; ++b2) {
          ComplexPair z1{Rational(a1), Rational(b1)};
          ComplexPair z2{Rational(a2), Rational(b2)};
          CHECK(sqcx::complex_mul_gauss(z1, z2) == sqcx::complex_mul(z1, z2));
        }
}

TEST_CASE("complex division") {
  ComplexPair x{Rational(9), Rational(-2)};
  CHECK(sqcx::complex_div(x, {Rational(1), Rational(0)}) == x);
  // (15+40)/25, (30-20)/25
  CHECK(sqcx::complex_div({Rational(5), Rational(10)},
                          {Rational(3), Rational(4)}) ==
        ComplexPair{Rational(11, 5), Rational(2, 5)});
  CHECK_THROWS_AS(
      sqcx::complex_div({Rational(1), Rational(1)}, {Rational(0), Rational(0)}),
      sqcx::Error);
}

TEST_CASE("square-summing products") {
  // (1/2)(64 - 9 - 25) and (1/4)(64 - 4)
  CHECK(sqcx::logan_product(Rational(3), Rational(5)) == Rational(15));
  CHECK(sqcx::quarter_square_product(Rational(3), Rational(5)) == Rational(15));
  CHECK(sqcx::logan_product(Rational(17), Rational(0)) == Rational(0));
  // (1/2)(25 - 4 - 49) and (1/4)(25 - 81)
  CHECK(sqcx::logan_product(Rational(-2), Rational(7)) == Rational(-14));
  CHECK(sqcx::quarter_square_product(Rational(-2), Rational(7)) ==
        Rational(-14));
  CHECK(sqcx::quarter_square_product(Rational(5, 3), Rational(5, 3)) ==
        Rational(25, 9));
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 1000);
  return Rational(Int(num(rng)), Int(den(rng)));
}

} // namespace

TEST_CASE("identities hold on random rationals") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    CHECK(sqcx::logan_product(a, b) == a * b);
    CHECK(sqcx::quarter_square_product(a, b) == a * b);

    ComplexPair z1{a, b};
    ComplexPair z2{random_rational(rng), random_rational(rng)};
    CHECK(sqcx::complex_mul_gauss(z1, z2) == sqcx::complex_mul(z1, z2));
    CHECK(sqcx::complex_square(z1) == sqcx::complex_mul(z1, z1));
    if (!(z2.re.is_zero() && z2.im.is_zero()))
      CHECK(sqcx::complex_mul(sqcx::complex_div(z1, z2), z2) == z1);
  }
}

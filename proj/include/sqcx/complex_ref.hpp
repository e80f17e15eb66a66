#pragma once

#include "sqcx/rational.hpp"

namespace sqcx {

/// a + jb over exact rationals.
struct ComplexPair {
  Rational re;
  Rational im;

  friend bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

/// Counts the real multiplications and additions a routine performs;
/// used to pin operation counts, not just values.
struct OpCount {
  int mults = 0;
  int adds = 0;
};

/// z^2 = (a^2 - b^2) + 2ab j.
ComplexPair complex_square(const ComplexPair& z);

/// Direct product: four real multiplications, two real additions.
ComplexPair complex_mul(const ComplexPair& z1, const ComplexPair& z2);

/// Same product through three real multiplications and five real
/// additions: m1 = a2(a1+b1), m2 = a1(b2-a2), m3 = b1(a2+b2),
/// re = m1-m3, im = m1+m2. Pass `count` to record the operation count.
ComplexPair complex_mul_gauss(const ComplexPair& z1, const ComplexPair& z2,
                              OpCount* count = nullptr);

/// Quotient via the conjugate of the divisor; throws Error on z2 = 0.
ComplexPair complex_div(const ComplexPair& z1, const ComplexPair& z2);

/// ab through three squares: (1/2)[(a+b)^2 - a^2 - b^2].
Rational logan_product(const Rational& a, const Rational& b);

/// ab through two squares: (1/4)[(a+b)^2 - (a-b)^2].
Rational quarter_square_product(const Rational& a, const Rational& b);

} // namespace sqcx

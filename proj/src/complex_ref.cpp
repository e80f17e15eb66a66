#include "sqcx/complex_ref.hpp"

namespace sqcx {

ComplexPair complex_square(const ComplexPair& z) {
  return {z.re * z.re - z.im * z.im, Rational(2) * z.re * z.im};
}

ComplexPair complex_mul(const ComplexPair& z1, const ComplexPair& z2) {
  return {z1.re * z2.re - z1.im * z2.im, z1.re * z2.im + z1.im * z2.re};
}

ComplexPair complex_mul_gauss(const ComplexPair& z1, const ComplexPair& z2,
                              OpCount* count) {
  OpCount local;
  OpCount& c = count ? *count : local;

  Rational t1 = z1.re + z1.im;
  ++c.adds;
  Rational m1 = z2.re * t1;
  ++c.mults;
  Rational t2 = z2.im - z2.re;
  ++c.adds;
  Rational m2 = z1.re * t2;
  ++c.mults;
  Rational t3 = z2.re + z2.im;
  ++c.adds;
  Rational m3 = z1.im * t3;
  ++c.mults;
  Rational re = m1 - m3;
  ++c.adds;
  Rational im = m1 + m2;
  ++c.adds;
  return {re, im};
}

ComplexPair complex_div(const ComplexPair& z1, const ComplexPair& z2) {
  Rational den = z2.re * z2.re + z2.im * z2.im;
  if (den.is_zero()) throw Error("complex division by zero");
  return {(z1.re * z2.re + z1.im * z2.im) / den,
          (z2.re * z1.im - z1.re * z2.im) / den};
}

Rational logan_product(const Rational& a, const Rational& b) {
  Rational s = a + b;
  return (s * s - a * a - b * b) * Rational(Int(1), Int(2));
}

Rational quarter_square_product(const Rational& a, const Rational& b) {
  Rational s = a + b;
  Rational d = a - b;
  return (s * s - d * d) * Rational(Int(1), Int(4));
}

} // namespace sqcx

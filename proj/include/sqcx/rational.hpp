#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sqcx/errors.hpp"

namespace sqcx {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar, always held in canonical form:
/// den > 0, gcd(|num|, den) = 1, and zero is 0/1.
///
/// Every arithmetic result is re-canonicalized, so no operation ever
/// rounds. Division by zero throws Error; callers that know the wire
/// context catch and rethrow with it attached.
class Rational {
public:
  Rational() = default;
  Rational(int v) : num_(v) {}
  Rational(long long v) : num_(v) {}
  Rational(Int v) : num_(std::move(v)) {}
  Rational(Int num, Int den);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r(a);
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or just "p" when q = 1.
  std::string str() const;

  /// Parses "p", "-p", or "p/q" with q > 0 digits. Throws ParseError on
  /// anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  /// Parses the forms accepted by parse() plus decimal literals like
  /// "-2.75", converted exactly (no binary rounding here; fixed-point
  /// representability is checked later by the evaluator).
  static Rational parse_allow_decimal(std::string_view text);

private:
  void canonicalize();

  Int num_{0};
  Int den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// 2^k as an exact rational; k may be negative.
Rational pow2(int k);

/// Cost classification of a constant multiplier.
struct ConstClass {
  enum class Kind { Zero, PlusMinusOne, PowerOfTwo, General };

  Kind kind = Kind::Zero;
  int exponent = 0; // for PowerOfTwo: |c| = 2^exponent, exponent != 0
  bool negative = false;

  friend bool operator==(const ConstClass&, const ConstClass&) = default;
};

/// Classifies c for the cost rules: ±1 entries are free, ±2^k entries
/// (k may be negative, e.g. 1/4 = 2^-2) are shifts, everything else is
/// a general constant multiplier. The sign is recorded separately.
ConstClass classify_constant(const Rational& c);

} // namespace sqcx

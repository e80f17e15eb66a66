#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqcx/rational.hpp"

namespace sqcx {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are keyed by exponent vectors of fixed length nvars(); zero
/// coefficients are never stored, so equality is term-map identity.
class Polynomial {
public:
  using Exponents = std::vector<std::uint32_t>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, Rational c);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Engaged iff the polynomial has no variable-bearing term.
  std::optional<Rational> as_constant() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational eval(std::span<const Rational> point) const;

  /// Human-readable form like "-2*a1^2 - 2*b2^2", highest exponent
  /// vector first; "0" for the zero polynomial.
  std::string str(std::span<const std::string> names) const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }

private:
  void add_term(const Exponents& e, const Rational& c);
  static void check_same_arity(const Polynomial& a, const Polynomial& b);

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Quotient of two polynomials; the denominator is never identically
/// zero. Not reduced by polynomial GCD -- equivalence is decided by
/// cross multiplication, which is enough because schemes apply at most
/// one divide stage per output.
class RationalFn {
public:
  RationalFn() = default;
  explicit RationalFn(Polynomial num);
  RationalFn(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_polynomial() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  /// Throws Error when b.num() is identically zero.
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);

  RationalFn squared() const { return *this * *this; }
  RationalFn scaled(const Rational& c) const;

  /// Structural equality (same numerator and denominator term maps).
  friend bool operator==(const RationalFn&, const RationalFn&) = default;

  /// Value equality as rational functions: cross-multiplied zero test.
  bool equivalent(const RationalFn& o) const;

  /// Throws Error when the denominator vanishes at the point.
  Rational eval(std::span<const Rational> point) const;

  std::string str(std::span<const std::string> names) const;

private:
  Polynomial num_{0};
  Polynomial den_ = Polynomial::constant(0, Rational(1));
};

/// If a = c * b for a single rational constant c (b not identically
/// zero), returns c; otherwise nullopt.
std::optional<Rational> constant_ratio(const Polynomial& a, const Polynomial& b);

} // namespace sqcx
